"""Command-line interface: every pipeline stage as a subcommand.

Exit codes: 0 on success, 1 on configuration/validation errors, 2 on a
runtime stage failure. All options can also be set through environment
variables prefixed ``BITEXTKIT_``.
"""

from __future__ import annotations

import json
import sys

import click

from . import __version__
from .cleaner import audit_table, clean
from .cognates import count_examined, extract_cognates, preservation
from .corpus_io import SentencePair, corpus_stats, read_parallel, read_tsv, write_parallel
from .exceptions import BitextError
from .langid import classify, load_model, save_model, train
from .metrics import score_report
from .pipeline import ConfigParseError, StageFailure, run_pipeline, validate_config
from .tokenizer import detokenize, resolve_rules, tokenize


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _echo_json(payload: dict) -> None:
    click.echo(json.dumps(payload, indent=2, sort_keys=True))


def _with_provenance(payload: dict, config_echo: dict) -> dict:
    payload = dict(payload)
    payload["tool_version"] = __version__
    payload["config_echo"] = config_echo
    return payload


@click.group()
@click.version_option(version=__version__)
def cli():
    """Parallel-corpus cleaning and MT evaluation toolkit."""


@cli.command()
@click.option("--src", "src_path", type=click.Path(exists=True, dir_okay=False), help="Source-side file.")
@click.option("--tgt", "tgt_path", type=click.Path(exists=True, dir_okay=False), help="Target-side file.")
@click.option("--tsv", "tsv_path", type=click.Path(exists=True, dir_okay=False), help="Single TSV corpus instead of --src/--tgt.")
@click.option("--src-lang", default="src", show_default=True)
@click.option("--tgt-lang", default="tgt", show_default=True)
@click.option("--tokenized", is_flag=True, help="Input is already tokenized.")
def stats(src_path, tgt_path, tsv_path, src_lang, tgt_lang, tokenized):
    """Sentence/word counts and type-token ratios of a corpus."""
    try:
        if tsv_path:
            pairs = read_tsv(tsv_path, src_lang, tgt_lang)
        elif src_path and tgt_path:
            pairs = read_parallel(src_path, tgt_path, src_lang, tgt_lang)
        else:
            _fail("provide --tsv or both --src and --tgt", 1)
        result = corpus_stats(pairs, tokenized=tokenized)
    except BitextError as exc:
        _fail(str(exc), 2)
    _echo_json(
        _with_provenance(
            result.to_dict(),
            {"src": src_path, "tgt": tgt_path, "tsv": tsv_path, "tokenized": tokenized},
        )
    )


def _parse_seed(args) -> dict:
    seeds = {}
    for item in args:
        if "=" not in item:
            _fail(f"--seed expects LANG=FILE, got {item!r}", 1)
        lang, _, path = item.partition("=")
        try:
            with open(path, "r", encoding="utf-8") as fh:
                seeds[lang] = fh.read().splitlines()
        except OSError as exc:
            _fail(f"cannot read seed for {lang!r}: {exc}", 1)
    return seeds


@cli.command("langid-train")
@click.option("--seed", "seeds", multiple=True, required=True, help="LANG=FILE, one per language.")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
@click.option("--ngram-min", default=1, show_default=True)
@click.option("--ngram-max", default=4, show_default=True)
@click.option("--vocab-size", default=10000, show_default=True)
@click.option("--alpha", default=0.5, show_default=True)
def langid_train(seeds, out_path, ngram_min, ngram_max, vocab_size, alpha):
    """Train a character-n-gram language identifier from seed corpora."""
    corpus = _parse_seed(seeds)
    try:
        model = train(corpus, ngram_range=(ngram_min, ngram_max), vocab_size=vocab_size, smoothing_alpha=alpha)
        save_model(model, out_path)
    except (BitextError, ValueError) as exc:
        _fail(str(exc), 1)
    click.echo(f"trained {'/'.join(model.languages)} model with {len(model.vocabulary)} features -> {out_path}", err=True)


@cli.command("langid-classify")
@click.option("--model", "model_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--file", "input_path", type=click.File("r", encoding="utf-8"), default="-", help="Input lines (default stdin).")
def langid_classify(model_path, input_path):
    """Classify lines; emits TSV: text, predicted language, margin."""
    try:
        model = load_model(model_path)
    except BitextError as exc:
        _fail(str(exc), 2)
    for line in input_path:
        text = line.rstrip("\n").rstrip("\r")
        prediction = classify(model, text)
        click.echo(f"{text}\t{prediction.lang}\t{prediction.margin:.6f}")


@cli.command("clean")
@click.option("--src", "src_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--tgt", "tgt_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--src-lang", required=True)
@click.option("--tgt-lang", required=True)
@click.option("--model", "model_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--mode", type=click.Choice(["per_side", "concat", "both"]), default="both", show_default=True)
@click.option("--out-prefix", required=True, help="Kept pairs go to PREFIX.<src-lang> / PREFIX.<tgt-lang>.")
@click.option("--report", "report_path", type=click.Path(dir_okay=False), help="Write the JSON cleaning report here.")
@click.option("--full-report", is_flag=True, help="Include every per-pair decision in the report.")
@click.option("--audit", type=click.Choice(["tsv", "text"]), help="Print a removed-pairs audit table to stderr.")
@click.option("--no-clean", is_flag=True, help="Pass-through: keep everything (policy escape hatch for tiny corpora).")
@click.option("--workers", default=1, show_default=True)
def clean_cmd(src_path, tgt_path, src_lang, tgt_lang, model_path, mode, out_prefix, report_path, full_report, audit, no_clean, workers):
    """Remove noisy pairs using language identification."""
    if src_lang == tgt_lang:
        _fail("--src-lang and --tgt-lang must differ", 1)
    if not no_clean and not model_path:
        _fail("--model is required unless --no-clean is given", 1)
    out_src = f"{out_prefix}.{src_lang}"
    out_tgt = f"{out_prefix}.{tgt_lang}"
    try:
        pairs = list(read_parallel(src_path, tgt_path, src_lang, tgt_lang))
        if no_clean:
            kept = pairs
            body = {"total": len(pairs), "kept": len(pairs), "removed_by_reason": {}, "cleaning": "disabled"}
        else:
            model = load_model(model_path)
            result = clean(pairs, model, mode=mode, workers=workers, keep_decisions=full_report or bool(audit))
            kept = result.kept
            body = result.report.to_dict(include_decisions=full_report)
            if audit:
                click.echo(audit_table(result.report.decisions, pairs, fmt=audit), err=True)
        write_parallel(kept, out_src, out_tgt)
    except BitextError as exc:
        _fail(str(exc), 2)
    payload = _with_provenance(
        body,
        {
            "src": src_path,
            "tgt": tgt_path,
            "src_lang": src_lang,
            "tgt_lang": tgt_lang,
            "mode": mode if not no_clean else "no-clean",
            "workers": workers,
        },
    )
    if report_path:
        with open(report_path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    else:
        _echo_json(payload)
    click.echo(f"kept {len(kept)}/{len(pairs)} pairs -> {out_src}, {out_tgt}", err=True)


@cli.command("tokenize")
@click.option("--lang", required=True)
@click.option("--fallback-of", "fallback_of", default=None, help="Paired language whose rules apply when --lang is unsupported.")
@click.option("--aggressive-hyphen", is_flag=True)
@click.option("--input", "input_file", type=click.File("r", encoding="utf-8"), default="-")
@click.option("--output", "output_file", type=click.File("w", encoding="utf-8"), default="-")
def tokenize_cmd(lang, fallback_of, aggressive_hyphen, input_file, output_file):
    """Tokenize lines (stdin to stdout by default)."""
    rules = resolve_rules(lang, fallback_of, aggressive_hyphen=aggressive_hyphen)
    for line in input_file:
        text = line.rstrip("\n").rstrip("\r")
        output_file.write(" ".join(tokenize(text, rules)) + "\n")


@cli.command("detokenize")
@click.option("--lang", required=True)
@click.option("--fallback-of", "fallback_of", default=None)
@click.option("--input", "input_file", type=click.File("r", encoding="utf-8"), default="-")
@click.option("--output", "output_file", type=click.File("w", encoding="utf-8"), default="-")
def detokenize_cmd(lang, fallback_of, input_file, output_file):
    """Reverse Moses-style tokenization (stdin to stdout by default)."""
    rules = resolve_rules(lang, fallback_of)
    for line in input_file:
        text = line.rstrip("\n").rstrip("\r")
        output_file.write(detokenize(text.split(), rules) + "\n")


@cli.command("score")
@click.option("--hyp", "hyp_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--ref", "ref_paths", multiple=True, required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--lang", required=True, help="Language whose tokenizer rules apply before scoring.")
@click.option("--tokenized", is_flag=True, help="Inputs are already tokenized; split on whitespace only.")
@click.option("--lowercase", is_flag=True, help="Case-insensitive scoring.")
def score_cmd(hyp_path, ref_paths, lang, tokenized, lowercase):
    """BLEU, RIBES, and TER of a hypothesis file against reference files."""
    try:
        report = score_report(hyp_path, list(ref_paths), lang=lang, tokenized_input=tokenized, lowercase=lowercase)
    except BitextError as exc:
        _fail(str(exc), 2)
    _echo_json(
        _with_provenance(
            report.to_dict(),
            {"hyp": hyp_path, "refs": list(ref_paths), "lang": lang, "tokenized": tokenized, "lowercase": lowercase},
        )
    )
    click.echo(report.summary(), err=True)


@cli.command("cognates")
@click.option("--src", "src_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--ref", "ref_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--sys", "sys_path", type=click.Path(exists=True, dir_okay=False), help="System output to measure preservation on.")
@click.option("--threshold", default=0.3, show_default=True)
@click.option("--min-len", default=4, show_default=True)
@click.option("--dump", "dump_path", type=click.Path(dir_okay=False), help="Also write extracted pairs as TSV here.")
@click.option("--workers", default=1, show_default=True)
def cognates_cmd(src_path, ref_path, sys_path, threshold, min_len, dump_path, workers):
    """Extract cognates between source and reference; optionally measure
    how many a system output preserves. Inputs must be tokenized."""
    try:
        with open(src_path, "r", encoding="utf-8") as fh:
            src_lines = fh.read().splitlines()
        with open(ref_path, "r", encoding="utf-8") as fh:
            ref_lines = fh.read().splitlines()
        if len(src_lines) != len(ref_lines):
            _fail(f"line counts differ: {len(src_lines)} vs {len(ref_lines)}", 2)
        pairs = [SentencePair(i, s, r, "src", "ref") for i, (s, r) in enumerate(zip(src_lines, ref_lines))]
        found = extract_cognates(pairs, threshold=threshold, min_len=min_len, workers=workers)
        examined = count_examined(pairs, min_len)
        if sys_path:
            with open(sys_path, "r", encoding="utf-8") as fh:
                sys_tokens = [line.split() for line in fh.read().splitlines()]
            report = preservation(found, sys_tokens, threshold=threshold, examined=examined)
            body = report.to_dict()
        else:
            body = {
                "pairs_examined": examined,
                "cognate_pairs": len(found),
                "cognate_rate": (len(found) / examined) if examined else 0.0,
                "preserved": None,
                "preservation_rate": None,
                "threshold": threshold,
            }
    except BitextError as exc:
        _fail(str(exc), 2)
    if dump_path:
        with open(dump_path, "w", encoding="utf-8") as fh:
            fh.write("sentence\tsource_word\ttarget_word\tdistance\tnormalized_distance\tsource_position\ttarget_position\n")
            for c in found:
                fh.write(
                    f"{c.source_sentence_index}\t{c.source_word}\t{c.target_word}\t{c.distance}"
                    f"\t{c.normalized_distance:.6f}\t{c.source_position}\t{c.target_position}\n"
                )
    _echo_json(
        _with_provenance(
            body,
            {"src": src_path, "ref": ref_path, "sys": sys_path, "threshold": threshold, "min_len": min_len},
        )
    )


@cli.command("pipeline")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), help="key = value config file.")
@click.option("--set", "overrides", multiple=True, metavar="KEY=VALUE", help="Override a config key (wins over file and env).")
def pipeline_cmd(config_path, overrides):
    """Run the full prep or eval pipeline from a config file."""
    override_map = {}
    for item in overrides:
        if "=" not in item:
            _fail(f"--set expects KEY=VALUE, got {item!r}", 1)
        key, _, value = item.partition("=")
        override_map[key.strip()] = value.strip()
    try:
        config, errors = validate_config(config_path, overrides=override_map)
    except ConfigParseError as exc:
        _fail(str(exc), 1)
    if errors:
        for err in errors:
            click.echo(f"config error: {err}", err=True)
        sys.exit(1)
    try:
        run_pipeline(config)
    except StageFailure as exc:
        _fail(str(exc), 2)
    click.echo(f"pipeline complete -> {config.out_dir}", err=True)


def main():
    cli(auto_envvar_prefix="BITEXTKIT")


if __name__ == "__main__":
    main()
