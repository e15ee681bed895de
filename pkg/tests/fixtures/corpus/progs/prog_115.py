from fractions import Fraction
from uuid import UUID
from pathlib import PosixPath
import numpy as np
import datetime
is_empty = False
skip_blanks = False
full_name = 'Bob'
user_profile = {'oscar': 20, 'india': 5}
phase_factor = (2.2+2.2j)
beat_fraction = Fraction(29, 56)
request_uuid = UUID('73b61f97-ee39-9122-9983-0be22fbe2dcd')
seen_ids = {2, 4, 5, 9, 29}
page_size = 64
project_root = PosixPath('/srv/data')
distance_matrix = np.array([[15, 15], [ 2, 13], [ 5, 14]])
node_uuid = UUID('3c428413-4a21-6f1b-8e1b-3decd36141ed')
mix_fraction = Fraction(17, 47)
current_year = 1978
error_message = 'whiskey oscar'
item_count = 385
byte_sizes = [263, 283, 231]
fill_fraction = Fraction(25, 41)
input_files = ['victor_0.txt', 'xray_1.txt', 'victor_2.tsv', 'yankee_3.csv', 'quebec_4.csv']
is_valid = True
request_headers = {'accept': 'text/plain', 'retries': 3}
contact_email = 'bob26@mail.test'
home_city = 'Berlin'
i = 250
done_flag = False
last_login = datetime.datetime(2022, 4, 9, 6, 7)
beat_fraction = Fraction(8, 31)
best_match = None
phase_factor = (-1.5+3.1j)
current_year = 1959
