"""Streaming verification of the bounds over graph6 input, ratio surveys,
and family certification.

Per-graph records go to CSV, aggregates to JSON; both are byte-identical
across runs and worker counts. A hard failure is any violated guarantee:
a theorem check, a constructive certificate that does not satisfy its bound,
a witness that fails its predicate, or machinery that raises. Parse failures
are recorded and skipped, never fatal.
"""

import csv
import json
import multiprocessing
import random
import zlib
from dataclasses import dataclass
from fractions import Fraction

from .constructive import build_isolating_set, survey_ratios
from .errors import Graph6ParseError, OrderCapError
from .families import FAMILIES
from .graph import bits, classify, encode_graph6, parse_graph6
from .partition import (
    check_delta_regime,
    compute_partition,
    refine_pairs,
    refine_twins,
    representatives_dominate,
    undominated_witnesses,
)
from .predicates import (
    is_dominating,
    is_irredundant_mask,
    is_k_isolating,
    is_maximal_irredundant,
)
from .solvers import IR_ORDER_CAP, gamma, iota, iota_lower_bound, ir

GAMMA_CAP = 26
IOTA_CAP = 30


@dataclass
class CheckReport:
    records: list
    aggregate: dict
    hard_failures: list
    parse_errors: list


def applicable_ks(delta):
    """The isolation orders the constructive machinery covers for a graph."""
    return [k for k in range(max(1, delta - 2), delta + 2)]


def random_maximal_irredundant(g, rng):
    """A maximal irredundant set grown greedily in a seeded random order."""
    smask = 0
    order = list(range(g.n))
    rng.shuffle(order)
    grown = True
    while grown:
        grown = False
        for v in order:
            if smask >> v & 1:
                continue
            if is_irredundant_mask(g, smask | (1 << v)):
                smask |= 1 << v
                grown = True
    return tuple(bits(smask))


def _frac_str(f):
    f = Fraction(f)
    return f"{f.numerator}/{f.denominator}"


def _run_constructive(g, iset, k, record_key, checks, failures, g6, iotas):
    cert = build_isolating_set(g, iset, k)
    entry = {
        "regime": cert.regime,
        "t": " ".join(map(str, cert.t)),
        "t_size": len(cert.t),
        "bound": _frac_str(cert.bound),
        "s_param": cert.s_param,
        "satisfied": cert.satisfied,
        "isolating": cert.isolating_verified,
    }
    ok = cert.satisfied and cert.isolating_verified
    checks[f"construct_k{k}"] = checks.get(f"construct_k{k}", True) and ok
    if not cert.satisfied:
        failures.append(f"{g6} {record_key} k={k}: |T|={len(cert.t)} exceeds bound {entry['bound']}")
    if not cert.isolating_verified:
        failures.append(f"{g6} {record_key} k={k}: T is not {k}-isolating")
    if iotas is not None and iotas.get(k) is not None and len(cert.t) < iotas[k]:
        failures.append(f"{g6} {record_key} k={k}: |T| beats the exact optimum")
    return entry


def _run_machinery(g, iset, delta, tag, checks, failures, g6):
    part = compute_partition(g, iset)
    wit = undominated_witnesses(g, iset, part)
    checks[f"witnesses_{tag}"] = True
    if len(wit) != len(part.u):
        failures.append(f"{g6} {tag}: witness count mismatch")
        checks[f"witnesses_{tag}"] = False
    if not representatives_dominate(g, part):
        failures.append(f"{g6} {tag}: representatives fail to dominate member privates")
        checks[f"witnesses_{tag}"] = False
    if delta >= 1:
        check_delta_regime(g, part, delta)
        checks[f"delta_regime_{tag}"] = True
    if delta >= 2:
        refine_pairs(g, iset, part, delta - 1)
        checks[f"pairs_{tag}"] = True
    if delta >= 3:
        refine_twins(g, iset, part, delta - 2)
        checks[f"twins_{tag}"] = True
    return part


def check_graph(g6, spot_check=True):
    """Full per-graph verification; returns the record dict."""
    g = parse_graph6(g6)
    cls = classify(g)
    delta = cls.max_degree
    failures = []
    checks = {}

    enc = encode_graph6(g)
    stripped = g6.strip()
    if stripped.startswith(">>graph6<<"):
        stripped = stripped[len(">>graph6<<") :]
    checks["roundtrip"] = enc == stripped and parse_graph6(enc) == g
    if not checks["roundtrip"]:
        failures.append(f"{g6} roundtrip: re-encoded to {enc}")

    gam = gamma(g)
    irr = ir(g)
    iotas = {}
    for k in range(1, delta + 2):
        iotas[k] = iota(g, k).value

    checks["iota1_is_gamma"] = iotas.get(1, 0) == gam.value
    if not checks["iota1_is_gamma"]:
        failures.append(f"{g6}: iota(1)={iotas.get(1)} != gamma={gam.value}")
    checks["iota_monotone"] = all(
        iotas[k + 1] <= iotas[k] for k in range(1, delta + 1)
    )
    if not checks["iota_monotone"]:
        failures.append(f"{g6}: iota not monotone in k: {iotas}")

    if g.n and irr.value:
        checks["gamma_lt_2ir"] = gam.value < 2 * irr.value
        if not checks["gamma_lt_2ir"]:
            failures.append(f"{g6}: gamma={gam.value} not < 2*ir={2 * irr.value}")
        if delta >= 1:
            checks["iota_le_ir_at_delta"] = iotas[delta] <= irr.value
            checks["iota_le_ir_above_delta"] = iotas[delta + 1] <= irr.value
            if not checks["iota_le_ir_at_delta"]:
                failures.append(f"{g6}: iota({delta})={iotas[delta]} > ir={irr.value}")
            if not checks["iota_le_ir_above_delta"]:
                failures.append(f"{g6}: iota({delta + 1}) > ir")
        if delta >= 2:
            checks["ratio_bound_below_delta"] = (
                (2 * delta - 2) * iotas[delta - 1] <= (3 * delta - 4) * irr.value
            )
            if not checks["ratio_bound_below_delta"]:
                failures.append(
                    f"{g6}: iota({delta - 1})={iotas[delta - 1]} breaks the (3d-4)/(2d-2) bound"
                )
        if delta >= 3:
            checks["three_halves_two_below"] = 2 * iotas[delta - 2] <= 3 * irr.value
            if not checks["three_halves_two_below"]:
                failures.append(f"{g6}: iota({delta - 2}) breaks the 3/2 bound")
        if delta == 3:
            checks["delta3_gamma_3_2"] = 2 * gam.value <= 3 * irr.value
            if not checks["delta3_gamma_3_2"]:
                failures.append(f"{g6}: gamma breaks the 3/2 bound at delta 3")
        if cls.is_tree:
            checks["tree_strict_3_2"] = 2 * gam.value < 3 * irr.value
            if not checks["tree_strict_3_2"]:
                failures.append(f"{g6}: tree gamma not < 3/2 ir")
        if cls.is_cactus:
            checks["cactus_8_5"] = 5 * gam.value < 8 * irr.value
            if not checks["cactus_8_5"]:
                failures.append(f"{g6}: cactus gamma not < 8/5 ir")
        if cls.is_claw_free:
            checks["clawfree_3_2"] = 2 * gam.value <= 3 * irr.value
            if not checks["clawfree_3_2"]:
                failures.append(f"{g6}: claw-free gamma exceeds 3/2 ir")

    constructive = {}
    try:
        for k in applicable_ks(delta):
            entry = _run_constructive(
                g, irr.witness, k, "construct", checks, failures, g6, iotas
            )
            if Fraction(iotas[k]) > Fraction(*map(int, entry["bound"].split("/"))):
                failures.append(f"{g6} k={k}: exact iota exceeds the certified bound")
                checks[f"construct_k{k}"] = False
            constructive[str(k)] = entry
        _run_machinery(g, irr.witness, delta, "min", checks, failures, g6)
        if spot_check and g.n:
            rng = random.Random(zlib.crc32(g6.strip().encode()))
            spot = random_maximal_irredundant(g, rng)
            _run_machinery(g, spot, delta, "spot", checks, failures, g6)
            for k in applicable_ks(delta):
                _run_constructive(g, spot, k, "spot", checks, failures, g6, iotas)
    except Exception as exc:  # machinery violations are hard failures, not crashes
        failures.append(f"{g6} machinery: {type(exc).__name__}: {exc}")
        checks["machinery_clean"] = False
    else:
        checks["machinery_clean"] = True

    return {
        "graph6": g6.strip(),
        "n": g.n,
        "m": cls.m,
        "delta": delta,
        "connected": cls.is_connected,
        "tree": cls.is_tree,
        "cactus": cls.is_cactus,
        "block_graph": cls.is_block_graph,
        "claw_free": cls.is_claw_free,
        "cyclomatic": cls.cyclomatic_number,
        "gamma": gam.value,
        "ir": irr.value,
        "ir_witness": " ".join(map(str, irr.witness)),
        "iota": {str(k): v for k, v in iotas.items()},
        "constructive": constructive,
        "checks": checks,
        "failures": failures,
    }


def _verify_worker(task):
    idx, line, spot_check = task
    try:
        return idx, check_graph(line, spot_check=spot_check)
    except (Graph6ParseError, OrderCapError) as exc:
        return idx, {"parse_error": str(exc), "line": line.strip()}


def verify_stream(lines, jobs=1, max_n=None, spot_check=True):
    """Run the full theorem and machinery suite over graph6 lines.

    Records keep input order regardless of jobs; the aggregate is derived
    from them sequentially, so reports are byte-identical for any worker
    count.
    """
    tasks = []
    skipped = 0
    parse_errors = []
    for idx, raw in enumerate(lines):
        line = raw.strip()
        if not line:
            continue
        if max_n is not None:
            try:
                n = _peek_order(line)
            except (Graph6ParseError, OrderCapError) as exc:
                parse_errors.append({"line_number": idx + 1, "error": str(exc)})
                continue
            if n > max_n:
                skipped += 1
                continue
        tasks.append((idx + 1, line, spot_check))

    results = []
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(jobs) as pool:
            for idx, rec in pool.imap(_verify_worker, tasks, chunksize=64):
                results.append((idx, rec))
    else:
        results.extend(_verify_worker(t) for t in tasks)

    records = []
    hard_failures = []
    check_counts = {}
    ratio_rows = {}
    for idx, rec in results:
        if "parse_error" in rec:
            parse_errors.append({"line_number": idx, "error": rec["parse_error"]})
            continue
        records.append(rec)
        hard_failures.extend(rec["failures"])
        for name, ok in rec["checks"].items():
            slot = check_counts.setdefault(name, [0, 0])
            slot[0] += 1
            slot[1] += ok
        if rec["ir"]:
            for ks, val in rec["iota"].items():
                key = (rec["delta"], int(ks))
                ratio = Fraction(val, rec["ir"])
                cur = ratio_rows.get(key)
                if cur is None or ratio > cur[0]:
                    ratio_rows[key] = (ratio, rec["graph6"])

    aggregate = {
        "graphs": len(records),
        "skipped_over_max_n": skipped,
        "parse_error_count": len(parse_errors),
        "hard_failure_count": len(hard_failures),
        "checks": {
            name: {"evaluated": ev, "passed": ok}
            for name, (ev, ok) in sorted(check_counts.items())
        },
        "max_ratios": {
            f"delta={d},k={k}": {"ratio": _frac_str(r), "witness": w}
            for (d, k), (r, w) in sorted(ratio_rows.items())
        },
    }
    return CheckReport(
        records=records,
        aggregate=aggregate,
        hard_failures=hard_failures,
        parse_errors=parse_errors,
    )


def _peek_order(line):
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<") :]
    data = line.encode("ascii", errors="surrogateescape")
    from .graph import _parse_order

    n, _ = _parse_order(data, 0)
    return n


def _survey_worker(task):
    idx, line, k_max = task
    try:
        g = parse_graph6(line)
    except (Graph6ParseError, OrderCapError) as exc:
        return idx, {"parse_error": str(exc), "line": line.strip()}
    delta = g.max_degree()
    top = delta + 1 if k_max is None else min(k_max, delta + 1)
    irr = ir(g)
    iotas = {k: iota(g, k).value for k in range(1, top + 1)}
    return idx, {
        "graph6": line.strip(),
        "delta": delta,
        "ir": irr.value,
        "iota": iotas,
    }


def conjecture_survey(lines, jobs=1, max_n=None, k_max=None):
    """Largest observed iota_k / ir per (delta, k), with witnesses.

    Ratios are reported, never asserted; the monotone flags say whether the
    observed maxima are non-increasing in k for each delta.
    """
    tasks = []
    parse_errors = []
    for idx, raw in enumerate(lines):
        line = raw.strip()
        if not line:
            continue
        if max_n is not None:
            try:
                if _peek_order(line) > max_n:
                    continue
            except (Graph6ParseError, OrderCapError) as exc:
                parse_errors.append({"line_number": idx + 1, "error": str(exc)})
                continue
        tasks.append((idx + 1, line, k_max))

    results = []
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(jobs) as pool:
            results.extend(pool.imap(_survey_worker, tasks, chunksize=64))
    else:
        results.extend(_survey_worker(t) for t in tasks)

    recs = []
    for idx, rec in results:
        if "parse_error" in rec:
            parse_errors.append({"line_number": idx, "error": rec["parse_error"]})
            continue
        recs.append(rec)

    agg = survey_ratios(recs)
    return {
        "graphs": len(recs),
        "parse_errors": parse_errors,
        "rows": [
            {
                "delta": d,
                "k": k,
                "ratio": _frac_str(row["ratio"]),
                "ratio_float": float(row["ratio"]),
                "witness": row["witness"],
            }
            for (d, k), row in sorted(agg["rows"].items())
        ],
        "monotone_by_delta": {str(d): ok for d, ok in agg["monotone"].items()},
    }


# ---------------------------------------------------------------------------
# family certification
# ---------------------------------------------------------------------------

DEFAULT_GRID = (
    [("G1", {"t": t, "k": k}) for t in (1, 2, 3) for k in (1, 2, 3, 4)]
    + [("G2", {"t": t, "k": k}) for t in (1, 2) for k in (2, 3)]
    + [("Dkt", {"k": k, "t": t}) for k in (1, 2) for t in (1, 2)]
    + [("subcubicH", {"c": c}) for c in (2, 3)]
    + [("fivethirds", {})]
    + [("Sk", {"k": 3}), ("Fks", {"k": 4, "s": 2})]
    + [("Gkl", {"k": 6, "l": 3}), ("Hksl", {"k": 8, "s": 6})]
)

EXPECTED_DELTA = {
    "G1": lambda p: p["k"] - 1,
    "G2": lambda p: p["k"],
    "Gkl": lambda p: p["k"] + 1,
    "Dkt": lambda p: p["k"] + 2,
    "subcubicH": lambda p: 3,
    "fivethirds": lambda p: 4,
    "Sk": lambda p: p["k"] + 1,
    "Fks": lambda p: p["k"] + 1,
    "Hksl": lambda p: p["k"] + 1,
}


def certify_family(name, params):
    """Certify one family instance; returns (row, failures)."""
    inst = FAMILIES[name](**params)
    g = inst.graph
    failures = []
    row = {
        "family": name,
        "params": json.dumps(params, sort_keys=True),
        "n": g.n,
        "m": g.edge_count(),
        "delta": g.max_degree(),
    }
    expected = EXPECTED_DELTA[name](params)
    if row["delta"] != expected:
        failures.append(f"{name}{params}: max degree {row['delta']} != {expected}")

    if inst.witness_irredundant is not None:
        if not is_maximal_irredundant(g, inst.witness_irredundant):
            failures.append(f"{name}{params}: irredundant witness fails its predicate")
        row["ir_upper"] = len(inst.witness_irredundant)
    if inst.witness_isolating is not None:
        if not is_k_isolating(g, inst.witness_isolating, inst.k):
            failures.append(f"{name}{params}: isolating witness fails its predicate")
        row["iota_upper"] = len(inst.witness_isolating)
    if inst.witness_dominating is not None:
        if not is_dominating(g, inst.witness_dominating):
            failures.append(f"{name}{params}: dominating witness fails its predicate")

    if inst.designated_cliques is not None:
        bound, _cert = iota_lower_bound(g, inst.k, inst.designated_cliques)
        row["iota_lower"] = bound
        if inst.claimed_iota is not None and bound != inst.claimed_iota:
            failures.append(
                f"{name}{params}: packing bound {bound} != claimed {inst.claimed_iota}"
            )

    if inst.claimed_iota is not None:
        if g.n <= IOTA_CAP:
            got = iota(g, inst.k).value
            row["iota"] = got
            row["iota_certification"] = "solver"
            if got != inst.claimed_iota:
                failures.append(f"{name}{params}: iota {got} != claimed {inst.claimed_iota}")
        elif (
            inst.designated_cliques is not None
            and inst.witness_isolating is not None
            and row.get("iota_lower") == inst.claimed_iota
            and row.get("iota_upper") == inst.claimed_iota
        ):
            row["iota"] = inst.claimed_iota
            row["iota_certification"] = "witness+packing"
        else:
            row["iota_certification"] = "asserted"
            failures.append(f"{name}{params}: iota claim not pinned by certificates")
    if inst.claimed_ir is not None:
        if g.n <= GAMMA_CAP and g.n <= IR_ORDER_CAP:
            got = ir(g).value
            row["ir"] = got
            row["ir_certification"] = "solver"
            if got != inst.claimed_ir:
                failures.append(f"{name}{params}: ir {got} != claimed {inst.claimed_ir}")
        else:
            # the witness pins ir from above; the claimed lower bound stays asserted
            row["ir"] = inst.claimed_ir
            row["ir_certification"] = "witness-upper+asserted-lower"
            if (
                inst.witness_irredundant is not None
                and len(inst.witness_irredundant) != inst.claimed_ir
            ):
                failures.append(f"{name}{params}: witness size != claimed ir")
    if inst.claimed_gamma is not None:
        if g.n <= GAMMA_CAP:
            got = gamma(g).value
            row["gamma"] = got
            row["gamma_certification"] = "solver"
            if got != inst.claimed_gamma:
                failures.append(f"{name}{params}: gamma {got} != claimed {inst.claimed_gamma}")
        else:
            row["gamma"] = inst.claimed_gamma
            row["gamma_certification"] = "witness-upper+asserted-lower"
    row["status"] = "ok" if not failures else "FAIL"
    return row, failures


def certify_families(grid=None):
    """Certify a grid of family instances; default covers the tight cases
    the solvers can pin plus the two large certificate-only instances."""
    rows = []
    hard_failures = []
    for name, params in DEFAULT_GRID if grid is None else grid:
        row, failures = certify_family(name, params)
        rows.append(row)
        hard_failures.extend(failures)
    aggregate = {
        "instances": len(rows),
        "hard_failure_count": len(hard_failures),
        "by_status": {
            "ok": sum(1 for r in rows if r["status"] == "ok"),
            "FAIL": sum(1 for r in rows if r["status"] == "FAIL"),
        },
    }
    return CheckReport(
        records=rows, aggregate=aggregate, hard_failures=hard_failures, parse_errors=[]
    )


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

CSV_COLUMNS = [
    "graph6", "n", "m", "delta",
    "connected", "tree", "cactus", "block_graph", "claw_free", "cyclomatic",
    "gamma", "ir", "ir_witness",
    "iota_k1", "iota_k2", "iota_k3", "iota_k4", "iota_k5", "iota_k6", "iota_k7", "iota_k8",
    "construct_sizes", "construct_bounds", "s_params", "failure_count",
]


def write_csv(report, path):
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, extrasaction="ignore")
        writer.writeheader()
        for rec in report.records:
            row = {c: rec.get(c, "") for c in CSV_COLUMNS}
            for ks, val in rec.get("iota", {}).items():
                col = f"iota_k{ks}"
                if col in row:
                    row[col] = val
            cons = rec.get("constructive", {})
            ks = sorted(cons, key=int)
            row["construct_sizes"] = " ".join(str(cons[k]["t_size"]) for k in ks)
            row["construct_bounds"] = " ".join(cons[k]["bound"] for k in ks)
            row["s_params"] = " ".join(str(cons[k]["s_param"]) for k in ks)
            row["failure_count"] = len(rec.get("failures", []))
            for col in ("connected", "tree", "cactus", "block_graph", "claw_free"):
                row[col] = int(bool(rec.get(col)))
            writer.writerow(row)


def write_json(report_or_dict, path):
    payload = report_or_dict
    if isinstance(report_or_dict, CheckReport):
        payload = {
            "aggregate": report_or_dict.aggregate,
            "hard_failures": report_or_dict.hard_failures,
            "parse_errors": report_or_dict.parse_errors,
        }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
