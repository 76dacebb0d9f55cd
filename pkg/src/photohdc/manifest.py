"""Reproducibility manifest written next to every command's outputs."""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class RunManifest:
    command: str
    parameters: dict
    device_params_sha256: str | None
    seed: int | None
    tool_version: str
    timestamp_utc: str

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)


def file_sha256(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def build_manifest(command: str, parameters: dict, device_path=None,
                   seed=None) -> RunManifest:
    from . import __version__
    sha = file_sha256(device_path) if device_path else None
    clean = {k: v for k, v in sorted(parameters.items())
             if not k.startswith("_")
             and isinstance(v, (str, int, float, bool, list, dict, type(None)))}
    return RunManifest(
        command=command,
        parameters=clean,
        device_params_sha256=sha,
        seed=seed,
        tool_version=__version__,
        timestamp_utc=time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    )


def write_manifest(manifest: RunManifest, out_dir):
    path = out_dir / "manifest.json"
    with open(path, "w") as fh:
        fh.write(manifest.to_json())
        fh.write("\n")
    return path
