"""
Ideal files, reduction modes and JSON reports
=============================================

Germs can be written as plain text: one ``vars:`` line and one ``gen:`` line
per generator.  The computed symbol can be exported as a deterministic JSON
report, and the generator tidying between steps can be switched to compare
the literal construction with the faster default.
"""

import time

from tbsym import SymbolReport, parse_ideal_file, print_ideal_file, symbol_report_json, tb_symbol

text = """
# a cusp-like germ in two variables
vars: x, y
gen: x^3 - y^2
gen: x*y
"""
germ = parse_ideal_file(text)
print(print_ideal_file(germ, comment="normalized form"))

for reduction, minors in [("ideal", "schur"), ("span", "schur"), ("span", "all")]:
    start = time.perf_counter()
    symbol, chain = tb_symbol(germ, depth=5, reduction=reduction, minors=minors)
    seconds = time.perf_counter() - start
    sizes = [step.generators_after for step in chain]
    print(f"reduction={reduction:5} minors={minors:5} {symbol}  generators per step {sizes}  {seconds:.3f}s")

symbol, chain = tb_symbol(germ, depth=5)
print(symbol_report_json(SymbolReport.from_run(germ, 5, symbol, chain)))
