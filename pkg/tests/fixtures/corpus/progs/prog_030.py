from pathlib import PosixPath
import numpy as np
from collections import Counter, OrderedDict, defaultdict
from fractions import Fraction
train_size = 16
total_lines = 227
project_root = PosixPath('/mnt/output')
user_profile = {'oscar': 24, 'india': 7}
db_id = 140
config_map = {'quebec': 33, 'papa': 38}
years = [2001, 2001]
feature_matrix = np.array([[ 0, 9], [13, 11], [17, 8]])
skip_blanks = True
feature_matrix = np.array([[ 8, 0, 14, 6], [10, 12, 14, 7], [ 8, 11, 18, 3]])
char_counts = Counter({'union': 5, 'nova': 4, 'sierra': 3})
unique_words = {'delta', 'nova', 'oscar', 'xray'}
log_path = '/home/ci/project/nova_01.tsv'
total_lines = 570
avg_temperature = 201.26
visited_nodes = {3, 37, 7, 11, 12, 19}
word_list = ['hotel', 'mike', 'zulu', 'india', 'bravo']
matrix = np.array([[ 9, 0, 19, 3], [ 9, 11, 5, 16]])
has_header = False
min_max_pair = (17, 57)
config_map = {'bravo': 28, 'alpha': 44}
token_list = ['tango', 'india', 'echo', 'echo']
next_token = None
window_size = 128
beat_fraction = Fraction(3, 18)
ordered_headers = OrderedDict([('alpha', 3), ('bravo', 5)])
total_count = total_lines + total_lines
fourier_coeff = (4.4-0.9j)
j = 539
user_ids = [182, 74, 116, 146, 42]
height_meters = 259.99
