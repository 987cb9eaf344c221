"""Hamiltonian text format shared by the engine and the CLI.

One term per line: a real coefficient followed by factors like ``X0 Z2``,
or a bare ``I`` for the identity term.  ``#`` starts a comment; blank lines
are ignored.

    # 2-qubit example
    0.5  Z0 Z1
    -1.0 X0
    0.25 I
"""

from __future__ import annotations

import re

from .pauli import PauliString, PauliSum

_FACTOR_RE = re.compile(r"^([XYZ])(\d+)$")


class HamiltonianFormatError(ValueError):
    """Parse failure carrying the offending 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def parse_hamiltonian(text: str) -> PauliSum:
    terms = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            coefficient = float(fields[0])
        except ValueError:
            raise HamiltonianFormatError(number, f"bad coefficient {fields[0]!r}") from None
        if len(fields) == 1:
            raise HamiltonianFormatError(number, "coefficient without factors (use 'I')")
        factors: dict[int, str] = {}
        if fields[1:] != ["I"]:
            for token in fields[1:]:
                match = _FACTOR_RE.match(token)
                if match is None:
                    raise HamiltonianFormatError(number, f"bad factor {token!r}")
                axis, qubit = match.group(1), int(match.group(2))
                if qubit in factors:
                    raise HamiltonianFormatError(number, f"duplicate qubit {qubit}")
                factors[qubit] = axis
        terms.append(PauliString.from_map(coefficient, factors))
    return PauliSum(tuple(terms))


def load_hamiltonian(path: str) -> PauliSum:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_hamiltonian(handle.read())


def format_hamiltonian(hamiltonian: PauliSum) -> str:
    lines = []
    for term in hamiltonian:
        if abs(term.coefficient.imag) > 1e-12:
            raise ValueError("text format stores real coefficients only")
        lines.append(f"{term.coefficient.real!r} {term.label()}")
    return "\n".join(lines) + "\n"


def transverse_field_ising(n_qubits: int, coupling: float = 1.0,
                           field: float = 1.0, periodic: bool = False) -> PauliSum:
    """-J sum Z_i Z_{i+1} - h sum X_i on a chain (optionally a ring)."""
    terms = [
        PauliString(-coupling, ((q, "Z"), (q + 1, "Z")))
        for q in range(n_qubits - 1)
    ]
    if periodic and n_qubits > 2:
        terms.append(PauliString(-coupling, ((0, "Z"), (n_qubits - 1, "Z"))))
    terms.extend(PauliString(-field, ((q, "X"),)) for q in range(n_qubits))
    return PauliSum(tuple(terms))
