"""
Realizing a prescribed symbol
=============================

Any non-increasing eventually constant sequence is the symbol of a product of
multiplication germs and one zero germ.  A sequence is written in run-length
form, for example ``2^1,1^2,0*`` for (2, 1, 1, 0, 0, ...).
"""

from tbsym import parse_symbol_spec, realize, tb_symbol
from tbsym.germs import realization_factors

for text in ["2^1,1^2,0*", "3^2,1^1,0*", "2^1,1*", "3*"]:
    spec = parse_symbol_spec(text)
    factors = " x ".join(str(f) for f in realization_factors(spec)) or "zero_germ(0,1)"
    germ = realize(spec)
    depth = spec.prefix_length() + 2
    symbol, _ = tb_symbol(germ, depth=depth)
    ok = symbol.expand(depth) == spec.expansion().expand(depth)
    print(f"{text:12} {germ.m:2} variables  {factors:30} {symbol}  round trip: {ok}")
