"""Run every acceptance criterion and print one line each; exit status 1 on any failure."""

import sys

from orbihrr.acceptance import AcceptanceConfig, run_all


def main():
    results = run_all(AcceptanceConfig())
    for r in results:
        print(r.line())
        for f in r.failures:
            print("   ", f)
    sys.exit(0 if all(r.passed for r in results) else 1)


if __name__ == "__main__":
    main()
