"""CLI invocations whose output is frozen in tests/golden/<name>.json."""

CASES = {
    "decide_digon23": ["decide", "digon23.wdg"],
    "decide_path3": ["decide", "path3.wdg"],
    "decide_sym_triangle": ["decide", "sym_triangle.wdg"],
    "decide_asym_triangle": ["decide", "asym_triangle.wdg"],
    "decide_cycle4": ["decide", "cycle4.wdg"],
    "brute_digon23": ["brute", "digon23.wdg"],
    "brute_path3": ["brute", "path3.wdg"],
    "brute_sym_triangle": ["brute", "sym_triangle.wdg"],
    "brute_asym_triangle": ["brute", "asym_triangle.wdg"],
    "brute_cycle4": ["brute", "cycle4.wdg"],
    "invariant_poly_sym_triangle": ["invariant-poly", "sym_triangle.wdg"],
    "symmetry_sym_triangle": ["symmetry", "sym_triangle.wdg"],
    "symmetry_asym_triangle": ["symmetry", "asym_triangle.wdg"],
    "charpoly_digon23_none": ["charpoly", "digon23.wdg", "--signing", "none"],
    "charpoly_digon23_all_plus": ["charpoly", "digon23.wdg", "--signing", "all-plus"],
    "charpoly_triangle_bits111": ["charpoly", "triangle.wdg", "--signing", "bits:111"],
    "cycles_triangle": ["cycles", "triangle.wdg"],
    "validate_digon23": ["validate", "digon23.wdg"],
    "validate_missing_reverse": ["validate", "missing_reverse.wdg"],
}
