import numpy as np
from collections import Counter, OrderedDict, defaultdict
from fractions import Fraction
import datetime
from pathlib import PosixPath
keyword = 'whiskey mike'
selected_row = None
bias_vector = np.array([0.66, 0.56, 0.93, 0.81])
parent_node = None
ordered_settings = OrderedDict([('alpha', 0), ('bravo', 2)])
verbose_mode = False
duty_fraction = Fraction(2, 28)
excluded_ids = {32, 35, 3, 28, 29}
retry_interval = datetime.timedelta(seconds=33477)
unique_words = {'union', 'whiskey', 'xray', 'zulu'}
work_dir = PosixPath('/home/ci/project')
impedance = (-4.1+3.2j)
db_id = 187
total_weight = 305.3
fourier_coeff = (0.4-3.6j)
fill_fraction = Fraction(8, 10)
row_count = 593
start_year = 1955
batch_size = 256
name_to_id = {'quebec': 0, 'victor': 36, 'alpha': 41}
stopwords = frozenset({'bravo', 'sierra', 'xray'})
ordered_settings = OrderedDict([('alpha', 3), ('bravo', 7)])
end_time = datetime.datetime(2018, 3, 1, 14, 52)
data_dir = PosixPath('/mnt/output')
rgb_triplet = (54, 138, 165)
db_id = 222
word_list = ['alpha', 'romeo', 'yankee', 'zulu']
grace_period = datetime.timedelta(seconds=42681)
