from decimal import Decimal
import numpy as np
import datetime
from collections import Counter, OrderedDict, defaultdict
from uuid import UUID
birth_year = 1987
tax_amount = Decimal('1088.84')
message = 'hotel golf kilo'
birth_city = 'Quito'
pixel_grid = np.array([[3, 8, 6, 8, 0, 4, 7, 3, 4, 0], [1, 4, 4, 0, 3, 2, 5, 2, 6, 6], [7, 0, 2, 7, 8, 2, 7, 6, 0, 0], [4, 6, 1, 3, 6, 6, 5, 0, 7, 5], [3, 0, 4, 0, 4, 5, 0, 7, 3, 1], [6, 3, 0, 0, 8, 1, 6, 4, 3, 0], [3, 5, 4, 2, 0, 7, 5, 0, 5, 8], [0, 6, 6, 6, 4, 1, 2, 1, 6, 2], [1, 3, 3, 0, 2, 4, 7, 7, 5, 4], [5, 3, 2, 3, 4, 4, 7, 2, 8, 0], [5, 2, 3, 5, 2, 4, 0, 4, 0, 5], [0, 3, 1, 3, 5, 7, 7, 6, 3, 3]])
years = [1982, 1986, 2006, 2017, 2019]
input_file = '/var/cache/app/whiskey_07.log'
user_ids = [148, 76, 135]
reply_email = 'hiro07@example.com'
user_ids = [201, 159, 273, 197, 131, 202, 106]
elapsed_time = datetime.timedelta(seconds=82488)
city_name = 'Osaka'
headers_map = {'golf': 30, 'oscar': 30, 'papa': 46}
prime_numbers = [94, 14, 215]
log_path = '/mnt/output/echo_24.log'
prime_numbers = [273, 126, 172, 256, 232]
likelihood = 0.3295
name = 'David Kim'
adjacency_map = defaultdict(list, {'kilo': [4]})
prev_node = None
node_uuid = UUID('2ee0c991-949c-8083-5984-9966f637953a')
dropout_rate = 0.6394
is_empty = True
item_count = 339
account_balance = Decimal('1688.91')
batch_size = 32
