"""Runs the corpus command twice, validates every record against the schema
and compares the two reports byte for byte."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def run_corpus(binary: str, out: Path) -> subprocess.CompletedProcess:
    return subprocess.run([binary, "corpus", "--out", str(out)], capture_output=True, text=True)


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    with tempfile.TemporaryDirectory() as tmp:
        first, second = Path(tmp) / "a.jsonl", Path(tmp) / "b.jsonl"
        for path in (first, second):
            proc = run_corpus(binary, path)
            print(proc.stderr.strip())
            # 3 only means some verdict was uncomputable under the caps.
            if proc.returncode not in (0, 3):
                print(f"corpus exited with {proc.returncode}")
                return 1
        if first.read_bytes() != second.read_bytes():
            print("reports differ between runs")
            return 1
        lines = first.read_text().splitlines()
        errors = 0
        for n, line in enumerate(lines, 1):
            for err in validator.iter_errors(json.loads(line)):
                print(f"record {n}: {err.message}")
                errors += 1
        print(f"{len(lines)} records, {errors} schema errors")
        return 1 if errors or not lines else 0


if __name__ == "__main__":
    sys.exit(main())
