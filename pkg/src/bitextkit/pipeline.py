"""Pipeline configuration and stage orchestration.

A config file is flat ``key = value`` text ('#' starts a comment). Values
resolve in order: built-in defaults, then the file, then ``BITEXTKIT_<KEY>``
environment variables, then explicit overrides (the command line). The
``prep`` task runs stats -> clean -> tokenize over a training corpus; the
``eval`` task runs detokenize -> score -> cognates over system output.
Every stage writes a JSON report carrying the tool version and an echo of
the effective config; a manifest records stage order and input/output
hashes.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Optional

from . import __version__
from .cleaner import clean
from .cognates import count_examined, extract_cognates, preservation
from .corpus_io import SentencePair, corpus_stats, read_parallel, write_parallel
from .exceptions import BitextError
from .langid import load_model
from .metrics import score_report
from .tokenizer import detokenize, resolve_rules, tokenize

ENV_PREFIX = "BITEXTKIT_"

_TASKS = ("prep", "eval")
_CLEAN_MODES = ("per_side", "concat", "both")


class ConfigParseError(BitextError):
    def __init__(self, path, line: int, column: int, detail: str):
        self.path = path
        self.line = line
        self.column = column
        super().__init__(f"{path}:{line}:{column}: {detail}")


@dataclass
class PipelineConfig:
    task: str = "prep"
    src_lang: str = ""
    tgt_lang: str = ""
    out_dir: str = "."
    workers: int = 1
    # prep inputs
    source: str = ""
    target: str = ""
    model: str = ""
    clean_enabled: bool = True
    clean_mode: str = "both"
    tokenize_output: bool = True
    # eval inputs
    hyp: str = ""
    ref: str = ""
    lang: str = ""
    lowercase: bool = False
    cognate_threshold: float = 0.3
    cognate_min_len: int = 4

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


_BOOL_VALUES = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}


def parse_config_file(path) -> dict:
    """Parse ``key = value`` lines; raises ConfigParseError with position."""
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            if "=" not in line:
                col = len(line) - len(line.lstrip()) + 1
                raise ConfigParseError(path, lineno, col, "expected 'key = value'")
            key, _, value = line.partition("=")
            key = key.strip()
            if not key:
                raise ConfigParseError(path, lineno, 1, "empty key")
            values[key] = value.strip()
    return values


def _coerce(key: str, raw: str, kind, errors: list):
    if kind is bool:
        flag = _BOOL_VALUES.get(raw.lower())
        if flag is None:
            errors.append(f"{key}: expected a boolean, got {raw!r}")
        return flag
    try:
        return kind(raw)
    except ValueError:
        errors.append(f"{key}: expected {kind.__name__}, got {raw!r}")
        return None


def validate_config(
    path=None,
    overrides: Optional[dict] = None,
    env: Optional[dict] = None,
) -> tuple[Optional[PipelineConfig], list]:
    """Build and check a PipelineConfig; returns (config, all_violations).

    The config is None whenever violations were found.
    """
    env = os.environ if env is None else env
    config = PipelineConfig()
    errors: list = []

    raw_values = {}
    if path is not None:
        raw_values.update(parse_config_file(path))
    field_types = {f.name: type(getattr(config, f.name)) for f in fields(config)}
    for key in field_types:
        env_key = ENV_PREFIX + key.upper()
        if env_key in env:
            raw_values[key] = env[env_key]
    for key, value in (overrides or {}).items():
        raw_values[key] = value if isinstance(value, str) else str(value)

    for key, raw in raw_values.items():
        if key not in field_types:
            errors.append(f"unknown config key {key!r}")
            continue
        kind = field_types[key]
        value = raw if kind is str else _coerce(key, raw, kind, errors)
        if value is not None:
            setattr(config, key, value)

    if config.task not in _TASKS:
        errors.append(f"task: must be one of {_TASKS}, got {config.task!r}")
    if not config.src_lang:
        errors.append("src_lang: required")
    if not config.tgt_lang:
        errors.append("tgt_lang: required")
    if config.src_lang and config.src_lang == config.tgt_lang:
        errors.append(f"src_lang and tgt_lang must differ, both are {config.src_lang!r}")
    if config.workers < 1:
        errors.append(f"workers: must be >= 1, got {config.workers}")
    if config.clean_mode not in _CLEAN_MODES:
        errors.append(f"clean_mode: must be one of {_CLEAN_MODES}, got {config.clean_mode!r}")
    if not 0 < config.cognate_threshold <= 1:
        errors.append(f"cognate_threshold: must be in (0, 1], got {config.cognate_threshold}")
    if config.cognate_min_len < 1:
        errors.append(f"cognate_min_len: must be >= 1, got {config.cognate_min_len}")

    required_paths = []
    if config.task == "prep":
        for key in ("source", "target"):
            if not getattr(config, key):
                errors.append(f"{key}: required for the prep task")
            else:
                required_paths.append((key, getattr(config, key)))
        if config.clean_enabled:
            if not config.model:
                errors.append("model: required when cleaning is enabled")
            else:
                required_paths.append(("model", config.model))
    elif config.task == "eval":
        for key in ("hyp", "ref", "source"):
            if not getattr(config, key):
                errors.append(f"{key}: required for the eval task")
            else:
                required_paths.append((key, getattr(config, key)))
    for key, p in required_paths:
        if not Path(p).is_file():
            errors.append(f"{key}: no such file: {p}")

    if not config.lang:
        config.lang = config.tgt_lang
    return (None, errors) if errors else (config, [])


def _sha256(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _dump_json(path, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


class _Manifest:
    def __init__(self, config: PipelineConfig):
        self.config = config
        self.stages: list = []

    def record(self, name: str, inputs: list, outputs: list) -> None:
        self.stages.append(
            {
                "name": name,
                "inputs": {str(p): _sha256(p) for p in inputs},
                "outputs": {str(p): _sha256(p) for p in outputs},
            }
        )

    def write(self, path) -> None:
        _dump_json(
            path,
            {
                "tool_version": __version__,
                "created_unix": time.time(),
                "config_echo": self.config.to_dict(),
                "stages": self.stages,
            },
        )


def _report_payload(config: PipelineConfig, body: dict) -> dict:
    payload = dict(body)
    payload["tool_version"] = __version__
    payload["config_echo"] = config.to_dict()
    return payload


class StageFailure(BitextError):
    def __init__(self, stage: str, cause: Exception):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage {stage!r} failed: {cause}")


def _run_prep(config: PipelineConfig, out: Path, manifest: _Manifest) -> None:
    stage = "stats_before"
    try:
        pairs = list(read_parallel(config.source, config.target, config.src_lang, config.tgt_lang))
        stats = corpus_stats(pairs)
        report_path = out / "stats_before.json"
        _dump_json(report_path, _report_payload(config, stats.to_dict()))
        manifest.record(stage, [config.source, config.target], [report_path])
    except Exception as exc:
        raise StageFailure(stage, exc) from exc

    stage = "clean"
    cleaned_src = out / f"cleaned.{config.src_lang}"
    cleaned_tgt = out / f"cleaned.{config.tgt_lang}"
    try:
        if config.clean_enabled:
            model = load_model(config.model)
            result = clean(pairs, model, mode=config.clean_mode, workers=config.workers)
            kept = result.kept
            body = result.report.to_dict()
        else:
            kept = pairs
            body = {"total": len(pairs), "kept": len(pairs), "removed_by_reason": {}, "cleaning": "disabled"}
        write_parallel(kept, cleaned_src, cleaned_tgt)
        report_path = out / "cleaning_report.json"
        _dump_json(report_path, _report_payload(config, body))
        inputs = [config.source, config.target] + ([config.model] if config.clean_enabled else [])
        manifest.record(stage, inputs, [cleaned_src, cleaned_tgt, report_path])
    except Exception as exc:
        raise StageFailure(stage, exc) from exc

    stage = "stats_after"
    try:
        kept_pairs = kept
        stats = corpus_stats(kept_pairs)
        report_path = out / "stats_after.json"
        _dump_json(report_path, _report_payload(config, stats.to_dict()))
        manifest.record(stage, [cleaned_src, cleaned_tgt], [report_path])
    except Exception as exc:
        raise StageFailure(stage, exc) from exc

    if not config.tokenize_output:
        return
    stage = "tokenize"
    try:
        rules_src = resolve_rules(config.src_lang, config.tgt_lang)
        rules_tgt = resolve_rules(config.tgt_lang, config.src_lang)
        tokenized_src = out / f"tokenized.{config.src_lang}"
        tokenized_tgt = out / f"tokenized.{config.tgt_lang}"
        tokenized = [
            SentencePair(
                p.index,
                " ".join(tokenize(p.source, rules_src)),
                " ".join(tokenize(p.target, rules_tgt)),
                p.src_lang,
                p.tgt_lang,
            )
            for p in kept_pairs
        ]
        write_parallel(tokenized, tokenized_src, tokenized_tgt)
        report_path = out / "tokenize_report.json"
        _dump_json(
            report_path,
            _report_payload(
                config,
                {
                    "lines": len(tokenized),
                    "source_rules": rules_src.lang,
                    "target_rules": rules_tgt.lang,
                },
            ),
        )
        manifest.record(stage, [cleaned_src, cleaned_tgt], [tokenized_src, tokenized_tgt, report_path])
    except Exception as exc:
        raise StageFailure(stage, exc) from exc


def _read_lines(path) -> list:
    with open(path, "r", encoding="utf-8") as fh:
        return [line.rstrip("\n").rstrip("\r") for line in fh]


def _run_eval(config: PipelineConfig, out: Path, manifest: _Manifest) -> None:
    rules = resolve_rules(config.lang, config.src_lang)

    stage = "detokenize"
    detok_path = out / "detokenized.hyp"
    try:
        hyp_lines = _read_lines(config.hyp)
        with open(detok_path, "w", encoding="utf-8", newline="") as fh:
            for line in hyp_lines:
                fh.write(detokenize(line.split(), rules) + "\n")
        report_path = out / "detokenize_report.json"
        _dump_json(report_path, _report_payload(config, {"lines": len(hyp_lines), "rules": rules.lang}))
        manifest.record(stage, [config.hyp], [detok_path, report_path])
    except Exception as exc:
        raise StageFailure(stage, exc) from exc

    stage = "score"
    try:
        report = score_report(
            detok_path,
            [config.ref],
            lang=config.lang,
            tokenized_input=False,
            lowercase=config.lowercase,
        )
        report_path = out / "score.json"
        _dump_json(report_path, _report_payload(config, report.to_dict()))
        manifest.record(stage, [detok_path, config.ref], [report_path])
    except Exception as exc:
        raise StageFailure(stage, exc) from exc

    stage = "cognates"
    try:
        src_rules = resolve_rules(config.src_lang, config.lang)
        src_lines = _read_lines(config.source)
        ref_lines = _read_lines(config.ref)
        sys_lines = _read_lines(detok_path)
        if not (len(src_lines) == len(ref_lines) == len(sys_lines)):
            raise BitextError(
                f"source/ref/system line counts differ: {len(src_lines)}/{len(ref_lines)}/{len(sys_lines)}"
            )
        pairs = [
            SentencePair(
                i,
                " ".join(tokenize(src, src_rules)),
                " ".join(tokenize(ref, rules)),
                config.src_lang,
                config.lang,
            )
            for i, (src, ref) in enumerate(zip(src_lines, ref_lines))
        ]
        cognates = extract_cognates(
            pairs,
            threshold=config.cognate_threshold,
            min_len=config.cognate_min_len,
            workers=config.workers,
        )
        system_tokens = [tokenize(line, rules) for line in sys_lines]
        report = preservation(
            cognates,
            system_tokens,
            threshold=config.cognate_threshold,
            examined=count_examined(pairs, config.cognate_min_len),
        )
        report_path = out / "cognates.json"
        _dump_json(report_path, _report_payload(config, report.to_dict()))
        manifest.record(stage, [config.source, config.ref, detok_path], [report_path])
    except StageFailure:
        raise
    except Exception as exc:
        raise StageFailure(stage, exc) from exc


def run_pipeline(config: PipelineConfig) -> None:
    """Run the configured task, writing artifacts and a manifest to
    ``config.out_dir``. Raises StageFailure naming the first failed stage."""
    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest = _Manifest(config)
    if config.task == "prep":
        _run_prep(config, out, manifest)
    else:
        _run_eval(config, out, manifest)
    manifest.write(out / "manifest.json")
