"""A short walk through partial monotone maps and their normal forms.

Run with ``python3 demos/normal_forms.py``.
"""

from pisimp import ordinal_maps as om
from pisimp import words as wd
from pisimp.ordinal_maps import Flavor

# A partial map 3 -> 2 that forgets its first point and collapses the rest.
f = om.parse_pmap("3->2:[_,0,0]")
c = wd.canonical_form(f)
print(f"{f} has canonical form {c}")
print(f"  i={list(c.i_list)} j={list(c.j_list)} k={list(c.k_list)};"
      f" cod - dom = {f.cod - f.dom} = r - s - t = {c.r - c.s - c.t}")

# Any word in the generators rewrites to the same canonical form.
w = wd.parse_word("t0.s1.d0.d2 @2")
trace = []
n = wd.normalize(w, trace=trace)
print(f"\nnormalizing {w}:")
for pos, family, (i, j), text in trace:
    print(f"  {family:<4} at {pos} (i={i}, j={j})  ->  {text}")
print(f"  value {wd.eval_word(w)}; canonical form of the value: {wd.canonical_form(wd.eval_word(w))}")

# How many maps there are, and how the one-sided flavors sit inside.
print("\n|hom(n, 2)| by flavor")
print("  n  " + "  ".join(f"{fl.value:>5}" for fl in Flavor))
for n in range(5):
    print(f"  {n}  " + "  ".join(f"{om.count_hom(n, 2, fl):>5}" for fl in Flavor))

# Two of the printed identities are off by one; the report says which form holds.
rep = wd.verify_identities(5)
print()
for e in rep.erratum_summary():
    cx = e["counterexample"]
    print(f"printed {e['printed']}: fails at {cx['lhs']} ({cx['reason']})")
    print(f"  holds: {e['corrected']}")
