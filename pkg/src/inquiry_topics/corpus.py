"""Corpus and resource-file loading.

A corpus is an ordered collection of short free-text inquiries, all tagged
with the same product (clustering runs per product). Curated resources
(acronym dictionary, noise regexes, stoplists, out-of-vocabulary
definitions, trade names) live as small flat files in one directory; every
file is optional and an absent file simply yields an empty resource.
"""

from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .exceptions import CorpusFormatError, ResourceError

RESOURCE_FILES = {
    "acronyms": "acronyms.tsv",
    "noise_patterns": "noise_patterns.txt",
    "stopwords": "stopwords.txt",
    "stop_ngrams": "stop_ngrams.txt",
    "oov_definitions": "oov_definitions.tsv",
    "trade_names": "trade_names.tsv",
}

DEFAULT_RESOURCES_DIR = Path(__file__).parent / "data" / "default_resources"


@dataclass(frozen=True)
class Inquiry:
    """One short free-text inquiry, the unit of analysis."""

    id: str
    text: str
    product: str
    received_at: str | None = None


@dataclass(frozen=True)
class Corpus:
    """An ordered list of inquiries sharing one product tag."""

    inquiries: tuple[Inquiry, ...]
    product: str

    def __len__(self):
        return len(self.inquiries)

    def __iter__(self):
        return iter(self.inquiries)

    def ids(self):
        return [inq.id for inq in self.inquiries]


@dataclass(frozen=True)
class ResourceBundle:
    """Curated resources steering preprocessing and OOV handling.

    ``noise_patterns`` keeps the raw pattern strings in file order;
    ``compiled_noise`` holds the matching compiled regexes.
    """

    acronyms: dict[str, str] = field(default_factory=dict)
    noise_patterns: tuple[str, ...] = ()
    stopwords: frozenset[str] = frozenset()
    stop_ngrams: tuple[tuple[str, ...], ...] = ()
    oov_definitions: dict[str, str] = field(default_factory=dict)
    trade_names: dict[str, str] = field(default_factory=dict)

    @property
    def compiled_noise(self):
        return tuple(re.compile(p) for p in self.noise_patterns)


def _validate_inquiry(record, location):
    for key in ("id", "text", "product"):
        if key not in record or record[key] is None:
            raise CorpusFormatError(f"{location}: missing required field {key!r}")
    text = str(record["text"]).strip()
    if not text:
        raise CorpusFormatError(f"{location}: text is empty after trimming")
    received = record.get("received_at")
    return Inquiry(
        id=str(record["id"]),
        text=text,
        product=str(record["product"]),
        received_at=str(received) if received not in (None, "") else None,
    )


def _finish_corpus(inquiries, path):
    if not inquiries:
        raise CorpusFormatError(f"{path}: corpus file is empty")
    seen = {}
    for pos, inq in enumerate(inquiries):
        if inq.id in seen:
            raise CorpusFormatError(
                f"{path}: duplicate inquiry id {inq.id!r} (records {seen[inq.id] + 1} and {pos + 1})"
            )
        seen[inq.id] = pos
    products = {inq.product for inq in inquiries}
    if len(products) > 1:
        raise CorpusFormatError(
            f"{path}: corpus mixes products {sorted(products)}; one corpus holds one product"
        )
    return Corpus(inquiries=tuple(inquiries), product=inquiries[0].product)


def load_corpus(path, format=None):
    """Load a corpus from a JSONL or CSV file, preserving record order.

    ``format`` is ``"jsonl"`` or ``"csv"``; when omitted it is inferred
    from the file extension. Raises :class:`CorpusFormatError` with the
    offending line number on malformed records, duplicate ids, empty
    files, or a mixed product column.
    """
    path = Path(path)
    if format is None:
        format = "csv" if path.suffix.lower() == ".csv" else "jsonl"
    if format not in ("jsonl", "csv"):
        raise CorpusFormatError(f"unknown corpus format {format!r}")
    if not path.exists():
        raise CorpusFormatError(f"corpus file not found: {path}")

    inquiries = []
    if format == "jsonl":
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise CorpusFormatError(f"{path}:{lineno}: invalid JSON ({exc.msg})") from exc
                if not isinstance(record, dict):
                    raise CorpusFormatError(f"{path}:{lineno}: expected a JSON object")
                inquiries.append(_validate_inquiry(record, f"{path}:{lineno}"))
    else:
        with open(path, encoding="utf-8", newline="") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None:
                raise CorpusFormatError(f"{path}: corpus file is empty")
            missing = {"id", "text", "product"} - set(reader.fieldnames)
            if missing:
                raise CorpusFormatError(
                    f"{path}: header is missing column(s) {sorted(missing)}"
                )
            for record in reader:
                inquiries.append(_validate_inquiry(record, f"{path}:{reader.line_num}"))
    return _finish_corpus(inquiries, path)


def save_corpus(corpus, path, format=None):
    """Write a corpus back to JSONL or CSV (round-trips with load_corpus)."""
    path = Path(path)
    if format is None:
        format = "csv" if path.suffix.lower() == ".csv" else "jsonl"
    path.parent.mkdir(parents=True, exist_ok=True)
    if format == "jsonl":
        with open(path, "w", encoding="utf-8") as fh:
            for inq in corpus:
                record = {"id": inq.id, "text": inq.text, "product": inq.product}
                if inq.received_at is not None:
                    record["received_at"] = inq.received_at
                fh.write(json.dumps(record, ensure_ascii=False) + "\n")
    elif format == "csv":
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["id", "text", "product", "received_at"])
            for inq in corpus:
                writer.writerow([inq.id, inq.text, inq.product, inq.received_at or ""])
    else:
        raise CorpusFormatError(f"unknown corpus format {format!r}")
    return path


def _read_lines(path):
    try:
        raw = path.read_bytes()
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ResourceError(f"{path}: not valid UTF-8 ({exc.reason})") from exc
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _read_tsv_map(path, what):
    mapping = {}
    for lineno, line in _read_lines(path):
        key, sep, value = line.partition("\t")
        if not sep:
            raise ResourceError(f"{path}:{lineno}: expected '<key>\\t<value>' in {what} file")
        key = key.strip().lower()
        if key in mapping:
            raise ResourceError(f"{path}:{lineno}: duplicate {what} key {key!r}")
        mapping[key] = value.strip()
    return mapping


def load_resources(dir=None):
    """Load a :class:`ResourceBundle` from a directory of resource files.

    Every file is optional: a missing file contributes an empty resource.
    ``dir=None`` loads the defaults shipped with the package. Invalid
    regexes are rejected naming the offending pattern.
    """
    directory = Path(dir) if dir is not None else DEFAULT_RESOURCES_DIR
    if not directory.is_dir():
        raise ResourceError(f"resource directory not found: {directory}")

    acronyms = {}
    acr_path = directory / RESOURCE_FILES["acronyms"]
    if acr_path.exists():
        acronyms = _read_tsv_map(acr_path, "acronym")

    patterns = []
    pat_path = directory / RESOURCE_FILES["noise_patterns"]
    if pat_path.exists():
        for lineno, line in _read_lines(pat_path):
            try:
                re.compile(line)
            except re.error as exc:
                raise ResourceError(
                    f"{pat_path}:{lineno}: invalid regex {line!r} ({exc.msg})"
                ) from exc
            patterns.append(line)

    stopwords = set()
    sw_path = directory / RESOURCE_FILES["stopwords"]
    if sw_path.exists():
        for _, line in _read_lines(sw_path):
            stopwords.add(line.lower())

    stop_ngrams = []
    ng_path = directory / RESOURCE_FILES["stop_ngrams"]
    if ng_path.exists():
        for lineno, line in _read_lines(ng_path):
            ngram = tuple(line.lower().split())
            if len(ngram) < 2:
                raise ResourceError(
                    f"{ng_path}:{lineno}: stop n-grams need at least two tokens, got {line!r}"
                )
            stop_ngrams.append(ngram)

    oov_definitions = {}
    oov_path = directory / RESOURCE_FILES["oov_definitions"]
    if oov_path.exists():
        oov_definitions = _read_tsv_map(oov_path, "OOV definition")

    trade_names = {}
    tn_path = directory / RESOURCE_FILES["trade_names"]
    if tn_path.exists():
        trade_names = _read_tsv_map(tn_path, "trade name")

    return ResourceBundle(
        acronyms=acronyms,
        noise_patterns=tuple(patterns),
        stopwords=frozenset(stopwords),
        stop_ngrams=tuple(stop_ngrams),
        oov_definitions=oov_definitions,
        trade_names=trade_names,
    )
