from pathlib import PosixPath
import datetime
from fractions import Fraction
best_match = None
config_path = '/mnt/output/romeo_28.tsv'
peak_voltage = 17.09
json_path = '/home/ci/project/mike_34.txt'
distance_km = 226.22
likelihood = 0.8647
headers_map = {'oscar': 22, 'delta': 46, 'mike': 20, 'alpha': 34}
use_cache = True
work_dir = PosixPath('/var/cache/app')
byte_sizes = [248, 47, 210]
end_time = datetime.datetime(2021, 7, 9, 19, 42)
next_token = None
updated_at = datetime.datetime(2024, 2, 7, 17, 7)
probability = 0.001
beat_fraction = Fraction(18, 55)
should_retry = False
tag_names = ['quebec', 'kilo', 'nova', 'delta', 'nova', 'india']
output_dir = PosixPath('/srv/data')
created_at = datetime.datetime(2022, 8, 25, 17, 47)
project_root = PosixPath('/home/ci/project')
complex_root = (3.6-4.6j)
user_profile = {'whiskey': 42, 'victor': 25, 'sierra': 3, 'papa': 20}
num_epochs = 164
max_depth = 16
