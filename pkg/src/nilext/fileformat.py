"""The algebra file format.

::

    algebra B5_06
    dim 5
    field Q
    table
    e1 e1 = e2
    e1 e2 = e5
    e2 e1 = e3
    e3 e1 = e4
    e4 e1 = e5
    end

An optional ``params lambda mu`` line before ``table`` makes the table
parametric; coefficients are then expressions in the declared parameters
(``e2 e1 = lambda e3``).  Omitted products are zero; duplicate left-hand
sides are an error.  Printing a parsed algebra reproduces the text
bit-exactly (products in row-major order, terms by ascending basis index).
"""

from __future__ import annotations

import re

from . import exprs
from .algebra import Algebra
from .fields import Field, FieldError, parse_field


class FormatError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


_PRODUCT_RE = re.compile(r"^e(\d+)\s+e(\d+)\s*=\s*(.+)$")
_TERM_RE = re.compile(r"^(.*?)\s*e(\d+)$")


def parse_product_line(line: str, dim: int, lineno=None):
    """One table line -> (i, j, ((k, coeff_text), ...)); indices 1-based."""
    m = _PRODUCT_RE.match(line.strip())
    if not m:
        raise FormatError(f"cannot parse product line {line.strip()!r}", lineno)
    i, j = int(m.group(1)), int(m.group(2))
    if not (1 <= i <= dim and 1 <= j <= dim):
        raise FormatError(f"basis index out of range in {line.strip()!r}", lineno)
    terms = []
    for raw in exprs.split_top_level_plus(m.group(3)):
        raw = raw.strip()
        tm = _TERM_RE.match(raw)
        if not tm:
            raise FormatError(f"cannot parse term {raw!r}", lineno)
        coeff_text, k = tm.group(1).strip(), int(tm.group(2))
        if coeff_text.endswith("*"):
            coeff_text = coeff_text[:-1].strip()
        if not (1 <= k <= dim):
            raise FormatError(f"basis index out of range in term {raw!r}", lineno)
        if not coeff_text:
            coeff_text = "1"
        try:
            ast = exprs.parse(coeff_text)
        except exprs.ExprError as exc:
            raise FormatError(str(exc), lineno)
        terms.append((k, coeff_text, ast))
    return i, j, tuple(terms)


class ParametricTable:
    """A parsed parametric multiplication table awaiting parameter binding."""

    def __init__(self, name, dim, field, params, products):
        self.name = name
        self.dim = dim
        self.field = field
        self.params = tuple(params)
        self.products = tuple(products)  # (i, j, ((k, text, ast), ...))

    def instantiate(self, field: Field | None = None, bindings=None) -> Algebra:
        field = field or self.field
        if field is None:
            raise FormatError("no field given")
        bindings = {k: field.of(v) for k, v in (bindings or {}).items()}
        missing = [p for p in self.params if p not in bindings]
        if missing:
            raise FormatError(f"unbound parameters: {', '.join(missing)}")
        extra = [b for b in bindings if b not in self.params]
        if extra:
            raise FormatError(f"unknown parameters: {', '.join(extra)}")
        prods = {}
        for i, j, terms in self.products:
            entry = {}
            for k, text, ast in terms:
                try:
                    val = exprs.evaluate(ast, field, bindings)
                except ZeroDivisionError:
                    raise FormatError(
                        f"coefficient {text!r} undefined over {field}: division by zero"
                    )
                if val != field.zero:
                    entry[k] = field.add(entry.get(k, field.zero), val)
            prods[(i, j)] = entry
        return Algebra.from_products(field, self.dim, prods)


def parse_algebra(text: str):
    """Parse a file; returns an Algebra, or a ParametricTable when a
    ``params`` line is present."""
    name = None
    dim = None
    field = None
    params = ()
    products = []
    seen = set()
    state = "header"
    ended = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ended:
            raise FormatError("content after end", lineno)
        if state == "header":
            keyword, _, rest = line.partition(" ")
            rest = rest.strip()
            if keyword == "algebra":
                name = rest
            elif keyword == "dim":
                try:
                    dim = int(rest)
                except ValueError:
                    raise FormatError(f"bad dimension {rest!r}", lineno)
                if dim < 0:
                    raise FormatError("dimension must be nonnegative", lineno)
            elif keyword == "field":
                try:
                    field = parse_field(rest)
                except FieldError as exc:
                    raise FormatError(str(exc), lineno)
            elif keyword == "params":
                params = tuple(rest.split())
            elif keyword == "table":
                if dim is None:
                    raise FormatError("table before dim", lineno)
                state = "table"
            else:
                raise FormatError(f"unknown header line {line!r}", lineno)
        else:
            if line == "end":
                ended = True
                continue
            i, j, terms = parse_product_line(line, dim, lineno)
            if (i, j) in seen:
                raise FormatError(f"duplicate product e{i} e{j}", lineno)
            seen.add((i, j))
            for _k, text_c, ast in terms:
                for var in exprs.variables(ast):
                    if var not in params:
                        raise FormatError(f"unknown parameter {var!r}", lineno)
            products.append((i, j, terms))
    if not ended:
        raise FormatError("missing end line")
    if dim is None:
        raise FormatError("missing dim line")
    table = ParametricTable(name or "anonymous", dim, field, params, products)
    if params:
        return table
    if field is None:
        raise FormatError("missing field line")
    return table.instantiate(field, {})


def table_lines(algebra: Algebra):
    """Nonzero products as canonical table lines, row-major order."""
    f = algebra.field
    lines = []
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            terms = []
            for k in range(algebra.dim):
                c = algebra.sc[i][j][k]
                if c == f.zero:
                    continue
                if c == f.one:
                    terms.append(f"e{k + 1}")
                else:
                    terms.append(f"{f.format(c)} e{k + 1}")
            if terms:
                lines.append(f"e{i + 1} e{j + 1} = " + " + ".join(terms))
    return lines


def format_algebra(algebra: Algebra, name: str = "anonymous") -> str:
    lines = [f"algebra {name}", f"dim {algebra.dim}", f"field {algebra.field}", "table"]
    lines.extend(table_lines(algebra))
    lines.append("end")
    return "\n".join(lines) + "\n"
