from uuid import UUID
from decimal import Decimal
from fractions import Fraction
import datetime
total_weight = 124.57
base_url = 'https://files.test/api/v1/zulu'
request_uuid = UUID('e53f820e-3aa2-f711-8333-677cb45896a1')
parent_node = None
num_items = 311
tax_amount = Decimal('1221.68')
word_list = ['oscar', 'quebec', 'union', 'bravo', 'hotel', 'quebec']
beat_fraction = Fraction(20, 21)
distance_km = 81.64
node_uuid = UUID('4b94d336-f372-251a-c93f-21935c158b22')
years = [1986, 1993, 2000, 2020, 2024]
done_flag = False
num_rows = 465
tag_names = ['lima', 'romeo', 'delta', 'oscar', 'nova']
page_size = 64
best_match = None
contact_email = 'judy09@mail.test'
total_count = num_rows + num_items
start_time = datetime.datetime(2020, 4, 2, 18, 53)
buffer_size = 64
base_url = 'https://mail.test/api/v1/yankee'
request_uuid = UUID('b0cab562-478c-4538-fcc1-f608c521c091')
end_time = datetime.datetime(2022, 7, 10, 21, 8)
is_valid = False
phase_factor = (-0.3-4.9j)
version_info = (147, 164, 249)
impedance = (2.2-4.5j)
years = [1992, 1994]
word_list = ['oscar', 'zulu', 'zulu']
color_codes = {'alpha': 0, 'lima': 27, 'victor': 44, 'golf': 17}
