"""Comparison tables: one row per design per width."""
import csv
import io

from resources.counting import count
from resources.formulas import FORMULA_TEXT, DesignId, formula, min_width

TABLE_ROWS = {
    1: (DesignId.OOP_DRAPER, DesignId.OOP_THAPLIYAL, DesignId.OOP_BABU, DesignId.OOP_PROPOSED),
    2: (DesignId.IP_DRAPER, DesignId.IP_THAPLIYAL, DesignId.IP_CHENG, DesignId.IP_PROPOSED),
}
COLUMNS = ("table", "design", "n", "formula_text", "formula", "constructed", "match")


def table_rows(which, widths, constructed=True):
    """
    Rows of comparison table ``which`` (1 = out-of-place, 2 = in-place).

    ``constructed`` adds the T-count of the built circuit where a builder
    exists; ``match`` is None for rows without one.
    """
    from builders.registry import FORMULA_BUILDERS

    if which not in TABLE_ROWS:
        raise ValueError(f"unknown table {which!r} (expected 1 or 2)")
    if not widths:
        raise ValueError("at least one width is required")
    rows = []
    for n in widths:
        for design in TABLE_ROWS[which]:
            if n < min_width(design):
                continue
            value = formula(design, n)
            built = None
            if constructed and design in FORMULA_BUILDERS:
                built = count(FORMULA_BUILDERS[design].build(n)).t_count
            rows.append({
                "table": which,
                "design": design.label,
                "n": n,
                "formula_text": FORMULA_TEXT[design],
                "formula": str(value),
                "constructed": built,
                "match": None if built is None else bool(value == built),
            })
    return rows


def rows_to_csv(rows):
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: "" if row[key] is None else row[key] for key in COLUMNS})
    return buffer.getvalue()
