"""
Multiplication germs and the Euclidean algorithm
================================================

Multiplying a monic degree-n polynomial by a monic degree-r polynomial is a
polynomial map from the n + r lower coefficients to the n + r lower
coefficients of the product.  Its Thom-Boardman symbol at the origin can be
read off the Euclidean algorithm on n and r.
"""

from tbsym import euclid_run, euclid_symbol, mu, print_poly, tb_symbol

# the germ mu(2, 1): (x^2 + a1 x + a0)(x + b0)
germ = mu(2, 1)
print("variables:", ", ".join(germ.var_names))
for g in germ.generators:
    print("  ", print_poly(g))

# each step of the chain records the corank and the order of minors adjoined
symbol, chain = tb_symbol(germ)
print("symbol:", symbol)
for p, step in enumerate(chain, start=1):
    order = "-" if step.minor_order is None else step.minor_order
    print(f"  step {p}: corank {step.corank}, minors of order {order}")

# compare with the Euclid sequence for a few pairs
for n, r in [(3, 2), (4, 3), (5, 2), (7, 5)]:
    run = euclid_run(n, r)
    computed, _ = tb_symbol(mu(n, r))
    expected = euclid_symbol(n, r)
    print(f"mu({n},{r}): quotients {run.quotients}, computed {computed.normalized().prefix}, "
          f"Euclid {expected.prefix}, equal: {computed.normalized() == expected.normalized()}")
