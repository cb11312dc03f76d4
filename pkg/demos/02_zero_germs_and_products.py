"""
Zero germs and Cartesian products
=================================

The zero germ from C^a has corank a at every step, so its symbol is constant.
Putting two germs side by side on disjoint coordinates adds their symbols
entry by entry.
"""

from tbsym import cartesian_product, mu, symbol_add, tb_symbol, zero_germ

for a in range(4):
    symbol, chain = tb_symbol(zero_germ(a, 2))
    print(f"zero_germ({a}, 2): {symbol}")

# a product of two multiplication germs
left, right = mu(2, 1), mu(2, 2)
s_left, _ = tb_symbol(left)
s_right, _ = tb_symbol(right)
product = cartesian_product(left, right)
s_product, _ = tb_symbol(product)
print("variables of the product:", ", ".join(product.var_names))
print("left + right:", symbol_add(s_left, s_right))
print("product     :", s_product)

# a product with a zero germ keeps a constant tail
s_mixed, _ = tb_symbol(cartesian_product(mu(2, 1), zero_germ(1, 1)))
print("mu(2,1) x zero_germ(1,1):", s_mixed)
