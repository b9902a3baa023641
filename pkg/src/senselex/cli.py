"""Command-line entry point wrapping the toolkit for batch use.

Subcommands: lexicon validate|stats, propagate, kappa, sample,
profile-adverbs, karaka, profile-senses, compare, serve. Analytics emit
plot-ready TSV (with `# key=value` preamble comments) or JSON via --format.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import agreement, corpus, embeddings, ontology

DEFAULT_TAU = embeddings.DEFAULT_TAU
DEFAULT_MIN_CLUSTER = embeddings.DEFAULT_MIN_CLUSTER
DEFAULT_MIN_FREQ = corpus.DEFAULT_MIN_FREQ


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _json(payload) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2)


def _load_corpus(paths: Sequence[str]) -> list[corpus.ParsedSentence]:
    sentences: list[corpus.ParsedSentence] = []
    for path in paths:
        sentences.extend(corpus.parse_conllu(path))
    return sentences


def cmd_lexicon_validate(args) -> int:
    lexicon = ontology.load_lexicon(args.lexicon, args.language)
    print(f"OK: {len(lexicon)} entries ({args.language})")
    return 0


def cmd_lexicon_stats(args) -> int:
    lexicon = ontology.load_lexicon(args.lexicon, args.language)
    percent = lexicon.sense_distribution(args.pos, args.which)
    inventory = ontology.SENSE_INVENTORY[args.pos]
    if args.format == "json":
        _emit(
            _json(
                {
                    "language": args.language,
                    "pos": args.pos,
                    "which": args.which,
                    "percent": percent,
                }
            ),
            args.out,
        )
        return 0
    lines = ["sense\tlabel\tpercent"]
    for member in inventory:
        lines.append(f"{member.value}\t{member.label}\t{percent[member.value]:.1f}")
    _emit("\n".join(lines), args.out)
    return 0


def _read_targets(args) -> list[str]:
    targets = list(args.words)
    if args.targets:
        targets.extend(
            line.strip()
            for line in Path(args.targets).read_text(encoding="utf-8").splitlines()
            if line.strip()
        )
    if not targets:
        raise ValueError("no targets given; pass words or --targets FILE")
    return targets


def cmd_propagate(args) -> int:
    lexicon = ontology.load_lexicon(args.lexicon, args.language)
    space = embeddings.load_vectors(args.vectors)
    gold = ontology.load_lexicon(args.gold, args.language) if args.gold else None
    report = embeddings.propagation_report(
        space,
        _read_targets(args),
        lexicon,
        args.pos,
        tau=args.tau,
        min_cluster=args.min_cluster,
        gold=gold,
    )
    if args.format == "json":
        payload = {
            "pos": report.pos,
            "tau": report.tau,
            "min_cluster": report.min_cluster,
            "labeled_pool_size": report.labeled_pool_size,
            "labeled_out_of_vocab": report.labeled_out_of_vocab,
            "proposed": report.proposed,
            "judged": report.judged,
            "correct": report.correct,
            "accuracy": report.accuracy,
            "outcomes": [
                {
                    "target": o.target,
                    "status": o.status,
                    "proposed_sense": o.result.proposed_sense if o.result else None,
                    "gold_sense": o.gold_sense,
                    "correct": o.correct,
                    "tie_broken": o.result.tie_broken if o.result else None,
                    "cluster": [
                        {"word": m.word, "cosine": m.cosine, "sense": m.sense}
                        for m in o.result.cluster.members
                    ]
                    if o.result
                    else [],
                }
                for o in report.outcomes
            ],
        }
        _emit(_json(payload), args.out)
        return 0
    lines = [
        f"# pos={report.pos} tau={report.tau:.3f} min_cluster={report.min_cluster} "
        f"labeled_pool={report.labeled_pool_size} labeled_oov={report.labeled_out_of_vocab}",
    ]
    if report.accuracy is not None:
        lines.append(
            f"# proposed={report.proposed} judged={report.judged} "
            f"correct={report.correct} accuracy={report.accuracy:.3f}"
        )
    else:
        lines.append(f"# proposed={report.proposed}")
    lines.append("target\tstatus\tproposed_sense\tgold_sense\tcorrect\tcluster_size\ttie_broken")
    for o in report.outcomes:
        proposed = o.result.proposed_sense if o.result else ""
        size = len(o.result.cluster) if o.result else 0
        tie = str(o.result.tie_broken).lower() if o.result else ""
        gold_sense = o.gold_sense or ""
        correct = "" if o.correct is None else str(o.correct).lower()
        lines.append(f"{o.target}\t{o.status}\t{proposed}\t{gold_sense}\t{correct}\t{size}\t{tie}")
    _emit("\n".join(lines), args.out)
    return 0


def cmd_kappa(args) -> int:
    records = agreement.load_annotation_records(args.records)
    if args.pos:
        agreement.validate_record_labels(records, args.pos)
    result = agreement.cohen_kappa(records)
    if args.format == "json":
        _emit(
            _json(
                {
                    "n": result.n,
                    "p_o": result.p_o,
                    "p_e": result.p_e,
                    "kappa": result.kappa,
                    "band": result.band,
                }
            ),
            args.out,
        )
    elif args.format == "tsv":
        _emit(
            "n\tp_o\tp_e\tkappa\tband\n"
            f"{result.n}\t{result.p_o:.6f}\t{result.p_e:.6f}\t"
            f"{result.format(args.precision)}\t{result.band}",
            args.out,
        )
    else:
        _emit(
            f"n={result.n} observed={result.p_o:.3f} expected={result.p_e:.3f} "
            f"kappa={result.format(args.precision)} ({result.band})",
            args.out,
        )
    return 0


def cmd_sample(args) -> int:
    lexicon = ontology.load_lexicon(args.lexicon, args.language)
    items = agreement.draw_sample(lexicon, args.pos, args.n, args.seed)
    _emit("\n".join(items) if items else "", args.out)
    return 0


def cmd_profile_adverbs(args) -> int:
    sentences = _load_corpus(args.corpus)
    lexicon = ontology.load_lexicon(args.lexicon, args.language)
    profiles = corpus.adverbial_profiles(sentences, lexicon, min_freq=args.min_freq)
    if args.format == "json":
        payload = {
            "kind": "adverbial_profiles",
            "language": args.language,
            "min_freq": args.min_freq,
            "profiles": [
                {
                    "verb_lemma": p.verb_lemma,
                    "verb_freq": p.verb_freq,
                    "class_counts": p.class_counts,
                    "class_percent": p.class_percent,
                    "unknown_adverb_count": p.unknown_adverb_count,
                }
                for p in profiles
            ],
        }
        _emit(_json(payload), args.out)
        return 0
    classes = [m.value for m in ontology.AdverbSenseClass]
    lines = [f"# min_freq={args.min_freq} verbs={len(profiles)}"]
    lines.append("verb\tfreq\t" + "\t".join(classes) + "\tknown\tunknown")
    for p in profiles:
        cells = "\t".join(f"{p.class_percent[c]:.2f}" for c in classes)
        known = sum(p.class_counts.values())
        lines.append(f"{p.verb_lemma}\t{p.verb_freq}\t{cells}\t{known}\t{p.unknown_adverb_count}")
    _emit("\n".join(lines), args.out)
    return 0


def cmd_karaka(args) -> int:
    sentences = _load_corpus(args.corpus)
    lexicon = ontology.load_lexicon(args.lexicon, args.language)
    matrix = corpus.karaka_matrix(sentences, lexicon)
    if args.format == "json":
        payload = {
            "kind": "karaka_matrix",
            "counts": matrix.counts,
            "row_percent": matrix.row_percent,
            "unknown_verb_edges": matrix.unknown_verb_edges,
        }
        _emit(_json(payload), args.out)
        return 0
    lines = [f"# unknown_verb_edges={matrix.unknown_verb_edges}"]
    lines.append("sense\tkaraka\tcount\trow_percent")
    for sense in (s.value for s in ontology.VerbSenseType):
        for karaka in (k.value for k in ontology.Karaka):
            lines.append(
                f"{sense}\t{karaka}\t{matrix.counts[sense][karaka]}\t"
                f"{matrix.row_percent[sense][karaka]:.3f}"
            )
    _emit("\n".join(lines), args.out)
    return 0


def cmd_profile_senses(args) -> int:
    sentences = _load_corpus(args.corpus)
    lexicon = ontology.load_lexicon(args.lexicon, args.language)
    profile = corpus.sense_type_profile(sentences, lexicon, args.name)
    if args.format == "json":
        payload = {
            "kind": "sense_type_profile",
            "name": profile.corpus_name,
            "token_total": profile.token_total,
            "counts": profile.counts,
            "percent": profile.percent,
            "unknown_verb_tokens": profile.unknown_verb_tokens,
        }
        _emit(_json(payload), args.out)
        return 0
    lines = [
        f"# name={profile.corpus_name} token_total={profile.token_total} "
        f"unknown_verb_tokens={profile.unknown_verb_tokens}"
    ]
    lines.append("sense\tlabel\tcount\tpercent")
    for member in ontology.VerbSenseType:
        code = member.value
        lines.append(
            f"{code}\t{member.label}\t{profile.counts[code]}\t{profile.percent[code]:.3f}"
        )
    _emit("\n".join(lines), args.out)
    return 0


def _load_profile(path: str) -> dict:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(payload, dict) or "kind" not in payload:
        raise ValueError(f"{path}: not a profile file (emit one with --format json)")
    return payload


def cmd_compare(args) -> int:
    payload_a = _load_profile(args.profile_a)
    payload_b = _load_profile(args.profile_b)
    if payload_a["kind"] != payload_b["kind"]:
        raise ValueError("cannot compare profiles of different kinds")
    if payload_a["kind"] == "sense_type_profile":
        return _compare_sense_profiles(payload_a, payload_b, args)
    if payload_a["kind"] == "adverbial_profiles":
        return _compare_adverb_profiles(payload_a, payload_b, args)
    raise ValueError(f"unsupported profile kind {payload_a['kind']!r}")


def _compare_sense_profiles(payload_a: dict, payload_b: dict, args) -> int:
    profile_a = corpus.SenseTypeProfile(
        corpus_name=payload_a["name"],
        token_total=payload_a["token_total"],
        counts=payload_a["counts"],
        percent=payload_a["percent"],
        unknown_verb_tokens=payload_a.get("unknown_verb_tokens", 0),
    )
    profile_b = corpus.SenseTypeProfile(
        corpus_name=payload_b["name"],
        token_total=payload_b["token_total"],
        counts=payload_b["counts"],
        percent=payload_b["percent"],
        unknown_verb_tokens=payload_b.get("unknown_verb_tokens", 0),
    )
    comparison = corpus.compare_corpora(profile_a, profile_b)
    directions = {
        corpus.OVERUSED_IN_A: f"overused-in-{comparison.name_a}",
        corpus.OVERUSED_IN_B: f"overused-in-{comparison.name_b}",
        corpus.EQUAL: "equal",
    }
    if args.format == "json":
        payload = {
            "a": comparison.name_a,
            "b": comparison.name_b,
            "most_indicative": comparison.most_indicative,
            "rows": [
                {
                    "sense": r.sense,
                    "count_a": r.count_a,
                    "count_b": r.count_b,
                    "ll": r.ll,
                    "direction": directions[r.direction],
                }
                for r in comparison.rows
            ],
        }
        _emit(_json(payload), args.out)
        return 0
    labels = {m.value: m.label for m in ontology.VerbSenseType}
    lines = [f"# a={comparison.name_a} b={comparison.name_b}"]
    lines.append("sense\tlabel\tcount_a\tcount_b\tpercent_a\tpercent_b\tll\tdirection")
    for r in comparison.rows:
        percent_a = 100.0 * r.count_a / r.total_a
        percent_b = 100.0 * r.count_b / r.total_b
        lines.append(
            f"{r.sense}\t{labels[r.sense]}\t{r.count_a}\t{r.count_b}\t"
            f"{percent_a:.3f}\t{percent_b:.3f}\t{r.ll:.2f}\t{directions[r.direction]}"
        )
    _emit("\n".join(lines), args.out)
    return 0


def _compare_adverb_profiles(payload_a: dict, payload_b: dict, args) -> int:
    def revive(payload) -> list[corpus.AdverbialProfile]:
        return [
            corpus.AdverbialProfile(
                verb_lemma=p["verb_lemma"],
                verb_freq=p["verb_freq"],
                class_counts=p["class_counts"],
                class_percent=p["class_percent"],
                unknown_adverb_count=p["unknown_adverb_count"],
            )
            for p in payload["profiles"]
        ]

    comparison = corpus.author_adverb_comparison(revive(payload_a), revive(payload_b))
    labels = {m.value: m.label for m in ontology.AdverbSenseClass}

    def render(codes: tuple[str, ...]) -> str:
        return ", ".join(labels[c] for c in codes)

    if args.format == "json":
        payload = {
            "rows": [
                {"verb": lemma, "classes_a": list(a), "classes_b": list(b)}
                for lemma, a, b in comparison.rows
            ],
            "only_in_a": list(comparison.only_in_a),
            "only_in_b": list(comparison.only_in_b),
        }
        _emit(_json(payload), args.out)
        return 0
    lines = []
    if comparison.only_in_a:
        lines.append("# only_in_a=" + ",".join(comparison.only_in_a))
    if comparison.only_in_b:
        lines.append("# only_in_b=" + ",".join(comparison.only_in_b))
    lines.append("verb\tclasses_a\tclasses_b")
    for lemma, a, b in comparison.rows:
        lines.append(f"{lemma}\t{render(a)}\t{render(b)}")
    _emit("\n".join(lines), args.out)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import build_service, load_config

    config = load_config(args.config)
    app = build_service(config)
    uvicorn.run(app, host=config.host, port=config.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="senselex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, corpus_flags=False):
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")
        if corpus_flags:
            p.add_argument("--corpus", action="append", required=True, help="CoNLL-U file (repeatable)")
            p.add_argument("--lexicon", required=True)
            p.add_argument("--language", required=True, choices=ontology.LANGUAGES)

    lexicon = sub.add_parser("lexicon", help="validate a lexicon TSV or print sense distributions")
    lexicon_sub = lexicon.add_subparsers(dest="lexicon_command", required=True)
    validate = lexicon_sub.add_parser("validate")
    validate.add_argument("--lexicon", required=True)
    validate.add_argument("--language", required=True, choices=ontology.LANGUAGES)
    validate.set_defaults(func=cmd_lexicon_validate)
    stats = lexicon_sub.add_parser("stats")
    stats.add_argument("--lexicon", required=True)
    stats.add_argument("--language", required=True, choices=ontology.LANGUAGES)
    stats.add_argument("--pos", required=True, choices=ontology.POS_VALUES)
    stats.add_argument("--which", choices=("primary", "secondary"), default="primary")
    common(stats)
    stats.set_defaults(func=cmd_lexicon_stats)

    propagate = sub.add_parser("propagate", help="propose senses for unlabeled words by neighbor vote")
    propagate.add_argument("words", nargs="*", help="target words")
    propagate.add_argument("--targets", help="file with one target word per line")
    propagate.add_argument("--lexicon", required=True)
    propagate.add_argument("--language", required=True, choices=ontology.LANGUAGES)
    propagate.add_argument("--vectors", required=True, help="word2vec text format vector file")
    propagate.add_argument("--pos", required=True, choices=("verb", "adverb"))
    propagate.add_argument("--tau", type=float, default=DEFAULT_TAU)
    propagate.add_argument("--min-cluster", type=int, default=DEFAULT_MIN_CLUSTER)
    propagate.add_argument("--gold", help="gold lexicon TSV for accuracy scoring")
    common(propagate)
    propagate.set_defaults(func=cmd_propagate)

    kappa = sub.add_parser("kappa", help="Cohen's kappa over a two-coder record file")
    kappa.add_argument("--records", required=True, help="TSV: item_id, label_a, label_b")
    kappa.add_argument("--pos", choices=ontology.POS_VALUES, help="validate labels against this inventory")
    kappa.add_argument("--precision", type=int, default=2)
    kappa.add_argument("--out")
    kappa.add_argument("--format", choices=("text", "tsv", "json"), default="text")
    kappa.set_defaults(func=cmd_kappa)

    sample = sub.add_parser("sample", help="draw a reproducible evaluation sample")
    sample.add_argument("--lexicon", required=True)
    sample.add_argument("--language", required=True, choices=ontology.LANGUAGES)
    sample.add_argument("--pos", required=True, choices=ontology.POS_VALUES)
    sample.add_argument("--n", type=int, required=True)
    sample.add_argument("--seed", type=int, default=0)
    sample.add_argument("--out")
    sample.set_defaults(func=cmd_sample)

    adverbs = sub.add_parser("profile-adverbs", help="adverb class profiles of frequent verbs")
    common(adverbs, corpus_flags=True)
    adverbs.add_argument("--min-freq", type=int, default=DEFAULT_MIN_FREQ)
    adverbs.set_defaults(func=cmd_profile_adverbs)

    karaka = sub.add_parser("karaka", help="verb sense-type by karaka matrix")
    common(karaka, corpus_flags=True)
    karaka.set_defaults(func=cmd_karaka)

    senses = sub.add_parser("profile-senses", help="verb sense-type frequency profile")
    common(senses, corpus_flags=True)
    senses.add_argument("--name", required=True, help="corpus name recorded in the profile")
    senses.set_defaults(func=cmd_profile_senses)

    compare = sub.add_parser("compare", help="compare two JSON profiles (sense or adverb)")
    compare.add_argument("profile_a")
    compare.add_argument("profile_b")
    common(compare)
    compare.set_defaults(func=cmd_compare)

    serve = sub.add_parser("serve", help="run the annotation review service")
    serve.add_argument("--config", help="JSON config file (env overrides apply)")
    serve.set_defaults(func=cmd_serve)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
