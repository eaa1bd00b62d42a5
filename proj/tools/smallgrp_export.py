#!/usr/bin/env python3
# Copyright 2026 The pgroup-family Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Export p-groups from the GAP SmallGroups data files as pc-presentation text.

The SmallGroups library stores most groups of order p^n as a single integer
(GAP's ``CodePcGroup``). This script decodes those integers without needing a
GAP installation and writes the line-oriented format read by ``pgf census``:

    GROUP <order> <index>
    PRIME <p>
    NGENS <n>
    POWER <i> = <word>
    COMM <j> <i> = <word>
    END

Usage:

    smallgrp_export.py --smallgrp <dir-with-small2> --order 64 -o data/order64.pc

``<dir-with-small2>`` is the ``smallgrp`` package directory, e.g. from a GAP
install (``gap/pkg/smallgrp``) or the ``passagemath-gap-pkg-smallgrp-data``
wheel.
"""

import argparse
import gzip
import pathlib
import re
import sys


def factor_prime_power(order):
    p = 2
    while p * p <= order and order % p:
        p += 1
    if order % p:
        p = order
    n, m = 0, order
    while m % p == 0:
        m //= p
        n += 1
    if m != 1:
        raise ValueError(f"{order} is not a prime power")
    return p, n


def read_gap_text(path):
    opener = gzip.open if path.suffix == ".gz" else open
    with opener(path, "rt") as fh:
        lines = [ln for ln in fh if not ln.lstrip().startswith("#")]
    # GAP continues long integers across lines with a trailing backslash.
    return "".join(lines).replace("\\\n", "")


def extract_codes(text, order):
    """Returns the list assigned to SMALL_GROUP_LIB[ order ] (possibly split)."""
    head = re.compile(r"SMALL_GROUP_LIB\[\s*%d\s*\](\[\s*(\d+)\s*\])?\s*:=" % order)
    chunks = {}
    for m in head.finditer(text):
        start = text.index("[", m.end())
        depth, pos = 0, start
        while True:
            ch = text[pos]
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
                if depth == 0:
                    break
            pos += 1
        body = text[start + 1:pos]
        if "[" in body:
            raise ValueError("non-integer group code; not a pc-coded group")
        codes = [int(tok) for tok in re.split(r"[\s,]+", body) if tok]
        chunks[int(m.group(2) or 1)] = codes
    if not chunks:
        raise KeyError(f"no SMALL_GROUP_LIB[{order}] in data")
    return [c for k in sorted(chunks) for c in chunks[k]]


def decode(code, p, n):
    """Decodes a CodePcGroup integer into (power, comm) relation tables.

    Mirrors GAP's RelatorsCode for prime-power orders: n(n+1)/2 - 1 flag bits
    (powers of g_1..g_{n-1}, then commutators [g_j, g_i] for i < j in
    row-major order), followed by one base-|G| digit per set flag holding the
    exponent vector of the right-hand side, most significant generator first.
    """
    size = p ** n
    nbits = n * (n + 1) // 2 - 1
    flags = [(code >> k) & 1 for k in range(nbits)]
    rest = code >> nbits
    words = []
    for _ in range(sum(flags)):
        digit = rest % size
        rest //= size
        exps = []
        for _ in range(n):
            exps.append(digit % p)
            digit //= p
        words.append(list(reversed(exps)))
    if rest:
        raise ValueError(f"trailing data in code {code}")
    power, comm = {}, {}
    z, slot = 0, 0
    for i in range(1, n):
        if flags[slot]:
            power[i] = words[z]
            z += 1
        slot += 1
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if flags[slot]:
                comm[(j, i)] = words[z]
                z += 1
            slot += 1
    return power, comm


def format_word(exps):
    parts = [f"g{k + 1}^{e}" for k, e in enumerate(exps) if e]
    return "*".join(parts) if parts else "1"


def emit(out, order, index, p, n, power, comm):
    out.write(f"GROUP {order} {index}\n")
    out.write(f"PRIME {p}\n")
    out.write(f"NGENS {n}\n")
    for i in sorted(power):
        out.write(f"POWER {i} = {format_word(power[i])}\n")
    for (j, i) in sorted(comm, key=lambda ji: (ji[1], ji[0])):
        out.write(f"COMM {j} {i} = {format_word(comm[(j, i)])}\n")
    out.write("END\n")


def find_data_files(root, order):
    small2 = root / "small2"
    named = sorted(small2.glob(f"sml{order}.*.gz")) + sorted(small2.glob(f"sml{order}.z"))
    if named:
        return named
    return sorted(small2.glob("col*.z*"), key=lambda q: int(re.sub(r"\D", "", q.name) or 0))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--smallgrp", required=True, type=pathlib.Path)
    ap.add_argument("--order", required=True, type=int)
    ap.add_argument("-o", "--output", type=pathlib.Path)
    args = ap.parse_args(argv)

    p, n = factor_prime_power(args.order)
    codes = None
    for path in find_data_files(args.smallgrp, args.order):
        try:
            codes = extract_codes(read_gap_text(path), args.order)
            source = path.name
            break
        except KeyError:
            continue
    if codes is None:
        sys.exit(f"order {args.order} not found under {args.smallgrp}/small2")

    out = open(args.output, "w") if args.output else sys.stdout
    with out:
        out.write(f"# Groups of order {args.order} = {p}^{n}: {len(codes)} presentations.\n")
        out.write(f"# Exported from the SmallGroups library (Besche, Eick, O'Brien), file {source}.\n")
        out.write("# GROUP indices follow the library's numbering.\n")
        for idx, code in enumerate(codes, start=1):
            power, comm = decode(code, p, n)
            emit(out, args.order, idx, p, n, power, comm)
    print(f"order {args.order}: wrote {len(codes)} groups", file=sys.stderr)


if __name__ == "__main__":
    main()
