"""The expression front-end: exact series from text, with operator division.

The grammar covers rationals, x/D, + - * /, integer and parenthesized
rational exponents, and exp/log/sqrt.  Division follows operator-division
semantics: a divisor of positive order k cancels a shared x^k factor, so
indicators like D/(e^D - 1) evaluate exactly, while 1/D is rejected.
"""

from umbra import ParseError, eval_expr, parse, render
from umbra.errors import DivisionOrderError

EXAMPLES = [
    ("log(1+D)", 5),
    ("D/(1-D)", 5),
    ("D/(exp(D)-1)", 6),
    ("(1-sqrt(1-4*D))/2", 6),
    ("x*exp(x)", 5),
    ("(1+x)^(-1/2)", 4),
]

for text, order in EXAMPLES:
    print(f"{text:22s} ->", eval_expr(text, order))

print("\nrendering is canonical (parse . render . parse is a fixpoint):")
ast = parse("(1-sqrt(1-4*D))/2")
print("   rendered:", render(ast))
print("   stable  :", parse(render(ast)) == ast)

print("\nerrors carry byte offsets:")
for bad in ("1/D", "exp(x", "2 + * 3"):
    try:
        eval_expr(bad, 4)
    except (ParseError, DivisionOrderError) as exc:
        print(f"   {bad!r}: {exc}")
