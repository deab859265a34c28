"""Tiny arithmetic expressions in named parameters.

Grammar (whitespace insensitive)::

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := '-' factor | atom ('^' INT)?
    atom   := INT | IDENT | '(' expr ')'

Used for parametric structure constants (``lambda``, ``1/lambda``),
automorphism matrix patterns (``(1+lambda)*x*y``) and cohomology action
formulas.  Expressions are parsed once into a small AST and evaluated over any
field with a bindings map.
"""

from __future__ import annotations

import re

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class ExprError(ValueError):
    pass


def tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        pos = m.end()
        num, ident, sym = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif ident is not None:
            tokens.append(("var", ident))
        elif sym.strip():
            tokens.append(("op", sym))
    return tokens


def parse(text: str):
    tokens = tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take(sym=None):
        nonlocal pos
        kind, val = peek()
        if kind is None or (sym is not None and (kind, val) != ("op", sym)):
            raise ExprError(f"syntax error in expression {text!r}")
        pos += 1
        return kind, val

    def atom():
        kind, val = peek()
        if kind == "num":
            take()
            return ("num", val)
        if kind == "var":
            take()
            return ("var", val)
        if (kind, val) == ("op", "("):
            take("(")
            e = expr()
            take(")")
            return e
        raise ExprError(f"syntax error in expression {text!r}")

    def factor():
        kind, val = peek()
        if (kind, val) == ("op", "-"):
            take("-")
            return ("neg", factor())
        a = atom()
        kind, val = peek()
        if (kind, val) == ("op", "^"):
            take("^")
            ek, ev = peek()
            if ek != "num":
                raise ExprError(f"exponent must be an integer in {text!r}")
            take()
            return ("pow", a, ev)
        return a

    def term():
        a = factor()
        while True:
            kind, val = peek()
            if (kind, val) == ("op", "*"):
                take("*")
                a = ("mul", a, factor())
            elif (kind, val) == ("op", "/"):
                take("/")
                a = ("div", a, factor())
            else:
                return a

    def expr():
        a = term()
        while True:
            kind, val = peek()
            if (kind, val) == ("op", "+"):
                take("+")
                a = ("add", a, term())
            elif (kind, val) == ("op", "-"):
                take("-")
                a = ("sub", a, term())
            else:
                return a

    result = expr()
    if pos != len(tokens):
        raise ExprError(f"trailing tokens in expression {text!r}")
    return result


def variables(ast) -> set[str]:
    op = ast[0]
    if op == "num":
        return set()
    if op == "var":
        return {ast[1]}
    if op in ("neg",):
        return variables(ast[1])
    if op == "pow":
        return variables(ast[1])
    return variables(ast[1]) | variables(ast[2])


def evaluate(ast, field, bindings):
    """Evaluate over `field`; bindings map variable names to field elements.

    Raises ExprError for unbound variables; lets ZeroDivisionError propagate
    (a division like 1/lambda at lambda=0 is a constraint violation upstream).
    """
    op = ast[0]
    if op == "num":
        return field.of(ast[1])
    if op == "var":
        if ast[1] not in bindings:
            raise ExprError(f"unbound parameter {ast[1]!r}")
        return bindings[ast[1]]
    if op == "neg":
        return field.neg(evaluate(ast[1], field, bindings))
    if op == "pow":
        return field.pow(evaluate(ast[1], field, bindings), ast[2])
    a = evaluate(ast[1], field, bindings)
    b = evaluate(ast[2], field, bindings)
    if op == "add":
        return field.add(a, b)
    if op == "sub":
        return field.sub(a, b)
    if op == "mul":
        return field.mul(a, b)
    if op == "div":
        return field.div(a, b)
    raise ExprError(f"bad AST node {op!r}")


def evaluate_str(text: str, field, bindings=None):
    return evaluate(parse(text), field, bindings or {})


def split_top_level_plus(text: str):
    """Split on '+' at paren depth zero (for sums of coefficient*item terms)."""
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts
