"""Source-to-source instrumentation of assignments.

Each eligible assignment gets a recording statement inserted right after it
that re-reads the freshly bound name, so the assignment's own semantics are
untouched. Eligible targets are plain names in simple, annotated, augmented,
and tuple-unpacking assignments; attribute/subscript/starred targets, loop
variables, and comprehensions are left alone.
"""
from __future__ import annotations

import ast

RECORD_FUNC = "_nvtrace_record"  # single leading underscore: safe from class-body name mangling

_PROLOGUE = f"""\
try:
    from assigntracer.runtime import record as {RECORD_FUNC}
except Exception:
    def {RECORD_FUNC}(name, value, file, line):
        return value
"""


class InstrumentError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        super().__init__(message)
        self.line = line
        self.col = col


def _plain_names(target: ast.expr) -> list[str]:
    if isinstance(target, ast.Name):
        return [target.id]
    if isinstance(target, (ast.Tuple, ast.List)):
        names: list[str] = []
        for elt in target.elts:
            names.extend(_plain_names(elt))
        return names
    return []  # attribute, subscript, starred: excluded


def _record_stmt(name: str, module_id: str, line: int, anchor: ast.stmt) -> ast.stmt:
    call = ast.Call(
        func=ast.Name(id=RECORD_FUNC, ctx=ast.Load()),
        args=[
            ast.Constant(value=name),
            ast.Name(id=name, ctx=ast.Load()),
            ast.Constant(value=module_id),
            ast.Constant(value=line),
        ],
        keywords=[],
    )
    stmt = ast.Expr(value=call)
    ast.copy_location(stmt, anchor)
    return stmt


class _AssignTransformer(ast.NodeTransformer):
    def __init__(self, module_id: str):
        self.module_id = module_id
        self.count = 0

    def _with_records(self, node: ast.stmt, names: list[str]):
        if not names:
            return node
        out: list[ast.stmt] = [node]
        for name in names:
            out.append(_record_stmt(name, self.module_id, node.lineno, node))
            self.count += 1
        return out

    def visit_Assign(self, node: ast.Assign):
        self.generic_visit(node)
        names: list[str] = []
        for target in node.targets:
            names.extend(_plain_names(target))
        return self._with_records(node, names)

    def visit_AnnAssign(self, node: ast.AnnAssign):
        self.generic_visit(node)
        if node.value is None or not isinstance(node.target, ast.Name):
            return node  # bare annotation binds nothing
        return self._with_records(node, [node.target.id])

    def visit_AugAssign(self, node: ast.AugAssign):
        self.generic_visit(node)
        if not isinstance(node.target, ast.Name):
            return node
        return self._with_records(node, [node.target.id])


def _prologue_index(body: list[ast.stmt]) -> int:
    """Insertion point: after the module docstring and __future__ imports."""
    idx = 0
    if body and isinstance(body[0], ast.Expr) and isinstance(body[0].value, ast.Constant) \
            and isinstance(body[0].value.value, str):
        idx = 1
    while idx < len(body) and isinstance(body[idx], ast.ImportFrom) \
            and body[idx].module == "__future__":
        idx += 1
    return idx


def instrument_source(source_text: str, module_id: str) -> str:
    """Instrumented program text, or InstrumentError with the location of a
    syntax error (no partial output)."""
    if not module_id:
        raise InstrumentError("module_id must be non-empty")
    try:
        tree = ast.parse(source_text)
    except SyntaxError as exc:
        raise InstrumentError(f"syntax error: {exc.msg}", line=exc.lineno, col=exc.offset) from None

    transformer = _AssignTransformer(module_id)
    tree = transformer.visit(tree)

    prologue = ast.parse(_PROLOGUE).body
    idx = _prologue_index(tree.body)
    tree.body[idx:idx] = prologue
    ast.fix_missing_locations(tree)
    return ast.unparse(tree) + "\n"


def count_eligible_assignments(source_text: str) -> int:
    """Static count of recording calls instrument_source would insert."""
    tree = ast.parse(source_text)
    count = 0
    for node in ast.walk(tree):
        if isinstance(node, ast.Assign):
            for target in node.targets:
                count += len(_plain_names(target))
        elif isinstance(node, ast.AnnAssign):
            if node.value is not None and isinstance(node.target, ast.Name):
                count += 1
        elif isinstance(node, ast.AugAssign):
            if isinstance(node.target, ast.Name):
                count += 1
    return count
