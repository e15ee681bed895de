from fractions import Fraction
from uuid import UUID
from collections import Counter, OrderedDict, defaultdict
import numpy as np
import datetime
count = 414
mix_fraction = Fraction(22, 31)
success_rate = 0.5245
base_url = 'https://mail.test/api/v3/bravo'
train_size = 256
first_word = 'tango yankee'
min_max_pair = (21, 77)
node_uuid = UUID('29d5bd2e-8e0d-8b48-804e-cfdedc329d96')
next_token = None
word_counts = Counter({'xray': 5, 'echo': 4, 'whiskey': 3})
rgb_triplet = (157, 65, 2)
last_error = None
is_empty = False
matrix = np.array([[18, 10, 13, 10], [14, 18, 13, 3]])
json_path = '/var/cache/app/mike_33.log'
total_lines = 252
request_uuid = UUID('5fa428c1-04ca-0e72-2005-12df752d372c')
file_names = ['delta_0.tsv', 'lima_1.tsv', 'india_2.json', 'tango_3.tsv', 'kilo_4.tsv']
word_counts = Counter({'xray': 5, 'union': 4, 'zulu': 3})
api_url = 'https://files.test/api/v1/oscar'
selected_row = None
elapsed_time = datetime.timedelta(seconds=76536)
total_count = count + total_lines
should_retry = False
verbose_mode = True
log_path = '/home/ci/project/papa_38.txt'
matrix = np.array([[ 3, 0], [ 3, 13], [ 9, 1]])
grace_period = datetime.timedelta(seconds=29216)
request_headers = {'accept': 'text/plain', 'retries': 0}
reply_email = 'erika12@example.org'
total_weight = 172.92
download_url = 'https://files.test/api/v2/tango'
