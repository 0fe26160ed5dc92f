"""Checking published claims about a curved type-2 instance.

The shipped scene exampleE1 carries claim flags: the source asserts the
surface is flat, minimal, and harmonic. Independent computation confirms
flatness but contradicts minimality and harmonicity, so those claims come
back with the verdict "discrepancy". A discrepancy is not an internal
failure: every internal cross-check still agrees, and the exit code
stays zero. Verdict "fail" is reserved for internal disagreement.
"""

import importlib.resources

from ruled4.check import check_scene
from ruled4.scene import load_scene


def scene_path(name):
    return str(importlib.resources.files("ruled4") / "scenes" / name)


def main():
    cfg = load_scene(scene_path("exampleE1.json"))
    print(f"Scene '{cfg.name}', mode {cfg.mode}, claim flags {dict(cfg.claims)}")

    report = check_scene(cfg)
    for w in report.warnings:
        print(f"  director warning: {w}")

    print(f"\n{'claim':<28} {'verdict':<12} computed")
    for claim in report.claims:
        print(f"  {claim.name:<26} {claim.verdict:<12} {claim.computed}")

    print("\nDetails for the contradicted claims:")
    by_name = {c.name: c for c in report.claims}

    mini = by_name["minimality"]
    print(f"  minimality: asserted '{mini.paper_claim}'")
    print(f"    max |H| over the grid = {mini.details['max_abs_H']:.6e}")
    sample = mini.details["samples"][0]
    print(f"    sample point {sample['point']}: H = {sample['H']:.6e}, "
          f"h11_raw = {sample['h11_raw']:.10f}")

    lb = by_name["laplace_beltrami_zero"]
    print(f"  laplace_beltrami_zero: asserted '{lb.paper_claim}'")
    print(f"    max |Lap component| = {lb.details['max_abs_component']:.6e}")

    flat = by_name["flatness"]
    print(f"\nFlatness, by contrast, holds: max |K| = "
          f"{flat.details['max_abs_K']:.3e} -> {flat.verdict}")

    code = report.exit_code
    print(f"\nexit code = {code} (discrepancies report findings; only an "
          f"internal cross-check failure is nonzero)")
    assert code == 0
    assert mini.verdict == "discrepancy" and lb.verdict == "discrepancy"
    assert flat.verdict == "pass"

    print("done.")


if __name__ == "__main__":
    main()
