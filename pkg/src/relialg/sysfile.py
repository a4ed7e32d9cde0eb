"""JSON system-file format (version 1).

A system file carries the component count, per-component level bounds, the
system level count, minimal paths per level, optional probability rows
(p_{i,0} = 1 is implicit) and an optional component ordering (1-based):

    {
      "format": 1,
      "components": 5,
      "componentLevels": [1, 1, 1, 1, 1],
      "systemLevels": 1,
      "minimalPaths": {"1": [[1, 1, 0, 0, 0], [0, 0, 0, 1, 1]]},
      "probabilities": [[0.9], [0.9], [0.9], [0.9], [0.9]],
      "ordering": [3, 1, 2, 4]
    }
"""
from __future__ import annotations

import json
from pathlib import Path

from .errors import SystemFileError
from .systems import ProbabilityModel, SystemSpec, make_system, probability_model

FORMAT_VERSION = 1


def system_to_dict(spec: SystemSpec, model: ProbabilityModel | None = None) -> dict:
    doc: dict = {
        "format": FORMAT_VERSION,
        "components": spec.n,
        "componentLevels": list(spec.component_levels),
        "systemLevels": spec.system_levels,
        "minimalPaths": {
            str(level): [list(p) for p in spec.paths(level)]
            for level in range(1, spec.system_levels + 1)
        },
    }
    if model is not None:
        doc["probabilities"] = [list(row[1:]) for row in model.tables]
    if spec.ordering is not None:
        doc["ordering"] = [t + 1 for t in spec.ordering]
    return doc


def system_from_dict(doc: dict) -> tuple[SystemSpec, ProbabilityModel | None]:
    try:
        if doc.get("format") != FORMAT_VERSION:
            raise SystemFileError(f"unsupported format {doc.get('format')!r}")
        n = int(doc["components"])
        levels = [int(m) for m in doc["componentLevels"]]
        if len(levels) != n:
            raise SystemFileError("componentLevels length does not match components")
        m_sys = int(doc["systemLevels"])
        raw = doc["minimalPaths"]
        paths = {}
        for key, lvl in raw.items():
            paths[int(key)] = [tuple(int(e) for e in p) for p in lvl]
        if sorted(paths) != list(range(1, m_sys + 1)):
            raise SystemFileError(f"minimalPaths must cover levels 1..{m_sys}")
        ordering = None
        if "ordering" in doc:
            ordering = tuple(int(t) - 1 for t in doc["ordering"])
            if sorted(ordering) != list(range(n)):
                raise SystemFileError(f"ordering is not a permutation of 1..{n}")
        spec = make_system(levels, paths, ordering)
        model = None
        if "probabilities" in doc:
            rows = doc["probabilities"]
            if len(rows) != n:
                raise SystemFileError("probabilities row count does not match components")
            for i, row in enumerate(rows):
                if len(row) != levels[i]:
                    raise SystemFileError(
                        f"probability row {i + 1} must have {levels[i]} entries"
                    )
            model = probability_model(rows)
        return spec, model
    except SystemFileError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SystemFileError(f"malformed system file: {exc}") from exc


def load_system(path) -> tuple[SystemSpec, ProbabilityModel | None]:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SystemFileError(f"cannot read {path}: {exc}") from exc
    return system_from_dict(doc)


def save_system(path, spec: SystemSpec, model: ProbabilityModel | None = None) -> None:
    doc = system_to_dict(spec, model)
    Path(path).write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n")
