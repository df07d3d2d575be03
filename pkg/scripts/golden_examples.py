"""Print constants, PF numbers, RF matrices and minimal presentations of the worked examples."""
from aarf.almost_arith import AAPresentation, classify_symmetric, structure_constants
from aarf.rf import rf_closed_form, rf_count
from aarf.semigroup import apery_set, pseudo_frobenius
from aarf.toric import minimal_generating_set

EXAMPLES = [(14, 3, 4, 21), (10, 9, 3, 35), (11, 2, 4, 21)]

for params in EXAMPLES:
    P = AAPresentation(*params)
    H = P.semigroup
    sc = structure_constants(P)
    print(f"H = <{', '.join(map(str, P.gens))}>  (m0, d, p, n) = {params}")
    print(f"  Ap(H, m0) = {list(apery_set(H, P.m0).elements)}")
    print(f"  constants: {sc.as_dict()}")
    print(f"  PF = {list(pseudo_frobenius(H))}, case = {classify_symmetric(P, sc).value}")
    for f in pseudo_frobenius(H):
        M = rf_closed_form(P, sc, f)[0]
        print(f"  RF({f}) [{M.source}], {rf_count(H, f)} RF-matrices in total")
        for row in M.rows:
            print("     " + " ".join(f"{x:>3}" for x in row))
    mp = minimal_generating_set(H)
    print(f"  mu(I(H)) = {mp.count}")
    for b, s in zip(mp.generators, mp.betti_degrees):
        print(f"     [{s}] {b}")
    print()
