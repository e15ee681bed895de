import datetime
from fractions import Fraction
from decimal import Decimal
import numpy as np
decay_factor = 0.2325
should_retry = True
done_flag = False
updated_at = datetime.datetime(2025, 7, 6, 12, 20)
count = 205
last_error = None
file_names = ['bravo_0.tsv', 'golf_1.tsv', 'union_2.txt', 'bravo_3.json']
reply_email = 'carol02@example.com'
years = [1994, 1996, 2003]
tag_names = ['papa', 'golf', 'echo', 'hotel', 'victor']
duty_fraction = Fraction(1, 39)
visited_nodes = {26, 14, 31}
page_size = 16
selected_row = None
split_ratio = 0.5337
user_profile = {'whiskey': 13, 'alpha': 37, 'delta': 8}
scaled_rate = decay_factor * split_ratio
unit_price = Decimal('990.11')
batch_size = 256
is_valid = False
start_year = 1983
word_list = ['victor', 'union', 'quebec', 'xray', 'whiskey', 'union']
max_depth = 8
file_names = ['bravo_0.txt', 'tango_1.txt']
prev_node = None
prime_numbers = [184, 95, 58]
parent_node = None
matrix = np.array([[ 9, 19, 15, 18], [15, 18, 1, 13]])
config_map = {'victor': 1, 'sierra': 17}
duty_fraction = Fraction(8, 45)
train_size = 512
selected_row = None
