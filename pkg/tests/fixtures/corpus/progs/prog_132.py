import datetime
import numpy as np
from fractions import Fraction
from uuid import UUID
from pathlib import PosixPath
from collections import Counter, OrderedDict, defaultdict
start_time = datetime.datetime(2023, 1, 18, 0, 0)
rgb_triplet = (245, 246, 117)
input_file = '/home/ci/project/nova_25.log'
weights_matrix = np.array([[12, 16], [14, 12]])
byte_sizes = [108, 233, 292]
search_term = 'romeo'
std_deviation = 269.61
base_url = 'https://mail.test/api/v1/victor'
best_match = None
mix_fraction = Fraction(5, 49)
peak_voltage = 86.77
first_word = 'oscar tango'
created_at = datetime.datetime(2021, 9, 25, 3, 50)
is_empty = True
download_url = 'https://files.test/api/v1/papa'
request_uuid = UUID('653bce05-b109-b10b-ac91-6fe86daf54d3')
next_token = None
prev_node = None
cache_dir = PosixPath('/mnt/output')
end_time = datetime.datetime(2024, 5, 3, 20, 35)
skip_blanks = False
request_uuid = UUID('3b563afe-6445-3987-1915-c925fe866b1d')
bounds_tuple = (18, 194)
total_lines = 452
visited_nodes = {8, 33, 26, 35}
output_file = '/srv/data/delta_11.json'
peak_voltage = 362.33
locked_ids = frozenset({'bravo', 'delta', 'lima', 'mike'})
input_files = ['alpha_0.tsv', 'xray_1.log', 'yankee_2.txt']
word_counts = Counter({'hotel': 5, 'india': 4, 'romeo': 3})
min_max_pair = (14, 147)
