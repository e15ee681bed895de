from uuid import UUID
import datetime
from pathlib import PosixPath
import numpy as np
np_pd = 81
session_uuid = UUID('c71cd629-5a93-7c9e-8952-b7171a19ea6f')
seen_ids = {0, 1, 33, 8, 19, 23}
updated_at = datetime.datetime(2015, 10, 25, 4, 17)
years = [1985, 2004]
name_to_id = {'victor': 12, 'oscar': 21}
is_empty = False
data_dir = PosixPath('/srv/data')
split_ratio = 0.6459
next_token = None
trace_uuid = UUID('7fe5a4a4-f7c6-d2ca-d353-bfc8b02efa9e')
embedding_matrix = np.array([[13, 12, 3], [ 5, 3, 5]])
bounds_tuple = (37, 182)
cache_dir = PosixPath('/var/cache/app')
x = 436
config_map = {'golf': 32, 'tango': 37}
name_to_id = {'whiskey': 18, 'yankee': 18}
sleep_duration = datetime.timedelta(seconds=1134)
train_size = 64
request_uuid = UUID('ae8448b0-1897-b163-3833-558e51480647')
phase_factor = (-2.3+3.9j)
years = [1986, 1998, 2017, 2025]
end_time = datetime.datetime(2019, 9, 3, 14, 34)
visited_nodes = {13, 37, 30, 22}
