from semiheyting.lemmas import ALL_LAWS, CONDITIONAL, UNCONDITIONAL, failures


def test_law_suite_holds(small_algebras, C):
    algs = small_algebras + list(C.values())
    bad = [(law.statement, A.name) for A in algs for law, _ in failures(A)]
    assert bad == []


def test_every_conditional_group_is_exercised(small_algebras):
    groups = {law.group for law in CONDITIONAL}
    used = {law.group for law in CONDITIONAL for A in small_algebras if law.applies_to(A)}
    assert used == groups


def test_unconditional_applies_everywhere(C):
    assert all(law.applies_to(C["2"]) for law in UNCONDITIONAL)
    assert len(ALL_LAWS) == len(UNCONDITIONAL) + len(CONDITIONAL)


def test_failures_detects_a_false_law(C):
    from semiheyting.lemmas import Law
    wrong = Law("x -> y = y -> x")
    [(law, witness)] = failures(C["CSH3"], [wrong])
    # 0 -> 1 and 1 -> 0 are both 0; the first asymmetry is 1 -> 2 = 2 vs 2 -> 1 = 1
    assert law is wrong and witness == {"x": 1, "y": 2}
