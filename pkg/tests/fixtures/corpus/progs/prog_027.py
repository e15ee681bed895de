from fractions import Fraction
from pathlib import PosixPath
import numpy as np
from decimal import Decimal
from uuid import UUID
current_year = 1982
mix_fraction = Fraction(20, 36)
work_dir = PosixPath('/home/ci/project')
fourier_coeff = (4.5+3.9j)
input_file = '/opt/work/whiskey_30.log'
dropout_rate = 0.2599
api_url = 'https://files.test/api/v1/union'
distance_matrix = np.array([[14, 5], [15, 3], [16, 18]])
coordinates = (8, 82)
next_token = None
row_count = 264
min_max_pair = (47, 74)
name_to_id = {'bravo': 15, 'alpha': 11, 'kilo': 1}
token_list = ['yankee', 'golf', 'romeo', 'alpha', 'lima', 'delta']
impedance = (4.6-4.6j)
net_amount = Decimal('1694.68')
config_path = '/opt/work/alpha_16.log'
bounds_tuple = (41, 77)
request_uuid = UUID('41cd4c26-3940-9d74-b639-401771fde591')
std_deviation = 182.68
config_map = {'quebec': 33, 'nova': 30, 'mike': 29, 'zulu': 37}
month_names = ['January', 'February', 'March', 'April', 'May']
bounds_tuple = (17, 176)
headers_map = {'lima': 5, 'alpha': 18, 'golf': 36}
batch_size = 64
complex_root = (-2.7+2.3j)
work_dir = PosixPath('/var/cache/app')
excluded_ids = {0, 33, 28, 5}
is_empty = True
x = 448
