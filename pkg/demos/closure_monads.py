"""Eilenberg-Moore and Kleisli categories of a closure operator, and the pairs they classify.

Run with ``python3 demos/closure_monads.py``.
"""

from pisimp import bundled
from pisimp import monad_bridge as mb

M = bundled.load("closure_chain3")
print(f"{M.name}: T = {M.T.ob}")

EM, forget = mb.em_category(M)
print(f"\nalgebras ({len(EM.objects)}): " + ", ".join(mb.render(A) for A in EM.objects))
print("  these are exactly the closed points:", [c for c in M.C.objects if M.T.ob[c] == c])

Kl, incl = mb.kleisli_category(M)
print(f"\nKleisli category: {Kl.size[0]} objects, {Kl.size[1]} arrows")
for a in Kl.objects:
    print("  " + "  ".join(f"{a}~>{b}:{len(Kl.hom(a, b))}" for b in Kl.objects))

# A functor into EM is the same thing as a subequalizing pair.
for X in bundled.default_probes()[1:3]:
    H = mb.hom_category(X, EM)
    S = mb.subeq_category(M, X)
    print(f"\nover {X.name}: Cat(X, EM) has {H.size}, Subeq(X) has {S.size}")
    for s in S.objects:
        rep = mb.cone_check(mb.cone_from_subeq(M, s, 4))
        print(f"  {mb.render(s)} -> cone {'ok' if rep.ok else 'FAILS'} {rep.counts}")

print()
print(mb.em_comparison(M).to_text())
print(mb.kleisli_comparison(M).to_text())
