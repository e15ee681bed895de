from uuid import UUID
from pathlib import PosixPath
from fractions import Fraction
import numpy as np
split_ratio = 0.1663
session_uuid = UUID('cc0a0d8b-1453-6a16-70b7-d38c6bd6c311')
work_dir = PosixPath('/srv/data')
contact_email = 'judy23@example.org'
train_size = 128
color_codes = {'union': 12, 'papa': 10, 'lima': 31}
project_root = PosixPath('/var/cache/app')
duty_fraction = Fraction(29, 36)
j = 89
prev_node = None
reply_email = 'farid06@example.com'
impedance = (2.4-2.4j)
log_files = ['victor_0.csv', 'hotel_1.log', 'lima_2.csv']
file_names = ['romeo_0.log', 'nova_1.json', 'golf_2.log', 'kilo_3.json', 'union_4.csv', 'golf_5.log']
is_empty = True
color_codes = {'whiskey': 32, 'hotel': 32, 'golf': 36, 'india': 15}
request_uuid = UUID('ea8248f4-cec9-8345-f7ad-9199b51ae55e')
bounds_tuple = (38, 177)
request_headers = {'accept': 'text/plain', 'retries': 4}
user_age = 1977
weights_matrix = np.array([[ 2, 18], [ 9, 0], [15, 5]])
temperature = 381.87
split_ratio = 0.9552
seen_ids = {32, 2, 35, 6, 30}
score_vector = np.array([0.45, 0.06, 0.06, 0.86, 0.21])
