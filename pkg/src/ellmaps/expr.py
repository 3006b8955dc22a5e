"""A tiny exact arithmetic language for stratum and table formulas.

Grammar (a subset of Python expression syntax)::

    expr    := expr ('+' | '-') term | term
    term    := term ('*' | '/') factor | factor
    factor  := ('-' | '+') factor | atom
    atom    := INTEGER | NAME | '(' expr ')' | call
    call    := 'binom' '(' expr ',' expr ')' | 'pow2max0' '(' expr ')'

Names are bound from an environment of integers.  ``/`` is exact rational
division; a formula must evaluate to an integer.  ``binom(x, y)`` is zero
unless ``0 <= y <= x``; ``pow2max0(x)`` is ``2**max(0, x)``.
"""

from __future__ import annotations

import ast
import copy
from fractions import Fraction
from functools import lru_cache
from math import comb, inf


class ExprError(ValueError):
    pass


_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div)


def _binom(x: Fraction, y: Fraction) -> Fraction:
    if x.denominator != 1 or y.denominator != 1:
        raise ExprError("binom() needs integer arguments")
    x, y = int(x), int(y)
    return Fraction(comb(x, y) if 0 <= y <= x else 0)


def _pow2max0(x: Fraction) -> Fraction:
    if x.denominator != 1:
        raise ExprError("pow2max0() needs an integer argument")
    return Fraction(2 ** max(0, int(x)))


_FUNCS = {"binom": (2, _binom), "pow2max0": (1, _pow2max0)}


def _check(node: ast.AST) -> None:
    if isinstance(node, ast.Expression):
        _check(node.body)
    elif isinstance(node, ast.BinOp):
        if not isinstance(node.op, _BINOPS):
            raise ExprError(f"operator {type(node.op).__name__} not allowed")
        _check(node.left)
        _check(node.right)
    elif isinstance(node, ast.UnaryOp):
        if not isinstance(node.op, (ast.USub, ast.UAdd)):
            raise ExprError(f"operator {type(node.op).__name__} not allowed")
        _check(node.operand)
    elif isinstance(node, ast.Constant):
        if type(node.value) is not int:
            raise ExprError(f"only integer literals allowed, got {node.value!r}")
    elif isinstance(node, ast.Name):
        pass
    elif isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name) or node.func.id not in _FUNCS:
            raise ExprError("only binom() and pow2max0() may be called")
        if node.keywords or len(node.args) != _FUNCS[node.func.id][0]:
            raise ExprError(f"{node.func.id}() takes {_FUNCS[node.func.id][0]} positional argument(s)")
        for arg in node.args:
            _check(arg)
    else:
        raise ExprError(f"syntax {type(node).__name__} not allowed")


@lru_cache(maxsize=None)
def parse(text: str) -> ast.Expression:
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ExprError(f"cannot parse {text!r}: {exc.msg}") from None
    _check(tree)
    return tree


def _eval(node: ast.AST, env: dict) -> Fraction:
    if isinstance(node, ast.Expression):
        return _eval(node.body, env)
    if isinstance(node, ast.Constant):
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        try:
            return Fraction(env[node.id])
        except KeyError:
            raise ExprError(f"unbound name {node.id!r}") from None
    if isinstance(node, ast.UnaryOp):
        v = _eval(node.operand, env)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        x, y = _eval(node.left, env), _eval(node.right, env)
        if isinstance(node.op, ast.Add):
            return x + y
        if isinstance(node.op, ast.Sub):
            return x - y
        if isinstance(node.op, ast.Mult):
            return x * y
        if y == 0:
            raise ExprError("division by zero")
        return x / y
    # Call
    _, fn = _FUNCS[node.func.id]
    return fn(*(_eval(a, env) for a in node.args))


class _ExactDivision(ast.NodeTransformer):
    def visit_BinOp(self, node):
        self.generic_visit(node)
        if isinstance(node.op, ast.Div):
            call = ast.Call(func=ast.Name("_div", ast.Load()), args=[node.left, node.right], keywords=[])
            return ast.copy_location(call, node)
        return node


def _div(x, y):
    if y == 0:
        raise ExprError("division by zero")
    return Fraction(x) / y


def _py_binom(x, y):
    return _binom(Fraction(x), Fraction(y))


def _py_pow2max0(x):
    return _pow2max0(Fraction(x))


_GLOBALS = {"__builtins__": {}, "_div": _div, "binom": _py_binom, "pow2max0": _py_pow2max0}


@lru_cache(maxsize=None)
def compile_expr(text: str):
    """Code object for a validated expression, with exact division."""
    tree = _ExactDivision().visit(copy.deepcopy(parse(text)))
    return compile(ast.fix_missing_locations(tree), f"<expr {text}>", "eval")


def evaluate(text: str, **env: int) -> int:
    """Evaluate ``text`` exactly; the result must be an integer."""
    try:
        value = eval(compile_expr(text), _GLOBALS, env)
    except NameError as exc:
        raise ExprError(f"unbound name in {text!r}: {exc}") from None
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise ExprError(f"{text!r} is not integral at {env}: {value}")
        value = value.numerator
    return int(value)


def evaluate_tree(text: str, **env: int) -> int:
    """Reference evaluator walking the syntax tree; slower, used as a cross-check."""
    value = _eval(parse(text), env)
    if value.denominator != 1:
        raise ExprError(f"{text!r} is not integral at {env}: {value}")
    return int(value)


def names(text: str) -> set[str]:
    """Free variable names of an expression (function names excluded)."""
    tree = parse(text)
    called = {n.func for n in ast.walk(tree) if isinstance(n, ast.Call)}
    return {n.id for n in ast.walk(tree) if isinstance(n, ast.Name) and n not in called}


def degree_in(text: str, var: str = "d") -> float:
    """Polynomial degree of ``text`` in ``var``; ``inf`` if not polynomial."""

    def deg(node) -> float:
        if isinstance(node, ast.Expression):
            return deg(node.body)
        if isinstance(node, ast.Constant):
            return 0
        if isinstance(node, ast.Name):
            return 1 if node.id == var else 0
        if isinstance(node, ast.UnaryOp):
            return deg(node.operand)
        if isinstance(node, ast.BinOp):
            dl, dr = deg(node.left), deg(node.right)
            if isinstance(node.op, (ast.Add, ast.Sub)):
                return max(dl, dr)
            if isinstance(node.op, ast.Mult):
                return dl + dr
            return dl if dr == 0 else inf
        # binom / pow2max0 are polynomial only on constant arguments
        return 0 if all(deg(a) == 0 for a in node.args) else inf

    return deg(parse(text))
