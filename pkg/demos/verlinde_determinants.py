"""
Invariant matrices of small Verlinde categories
===============================================

The x-invariants of the simple objects of Ver_p, computed two ways, and
the kernels they control.
"""

from tprime.verlinde import RepCpObject, growth_bound_check, negligible_kernel_level, verp_determinant_report

for p in (3, 5, 7):
    r = verp_determinant_report(p)
    print(f"p={p}: det={r['det']}, |det| == p^(p-2): {r['abs_det'] == p ** (p - 2)}, "
          f"closed == oracle: {r['modes_agree']}")

# dimensions of the negligible kernel of the 2-dim indecomposable at p = 3
x = RepCpObject(3, (2,))
print("negligible kernel dims:", [negligible_kernel_level(x, n).dim for n in range(1, 5)])

r = growth_bound_check(5, 2, 4)
print("roots", [round(v, 4) for v in r["roots"]], "bound", round(r["bound"], 4))
