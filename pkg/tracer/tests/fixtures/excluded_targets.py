from types import SimpleNamespace

holder = SimpleNamespace()
holder.attr = 1
d = {}
d['k'] = 2
lst = [0]
lst[0] = 9
plain = 3
print(holder.attr, d['k'], lst[0], plain)
