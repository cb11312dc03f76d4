"""
Building blocks
===============

mu(k*r, r) has the same symbol as the product of r copies of mu(k, 1), even
though the two germs have different numbers of generators.
"""

from tbsym import mu, product_of, tb_symbol

for k, r in [(1, 2), (2, 2), (3, 2), (2, 3)]:
    big, _ = tb_symbol(mu(k * r, r))
    copies, _ = tb_symbol(product_of([mu(k, 1)] * r))
    print(f"k={k} r={r}: mu({k * r},{r}) {big.normalized()} | "
          f"{r} x mu({k},1) {copies.normalized()}")
