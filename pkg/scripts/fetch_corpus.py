#!/usr/bin/env python3
"""Download the reference corpora used by the corpus acceptance test.

Fetches the Canterbury and Calgary collections plus four large Pizza&Chili
texts into ./corpus (or --dest).  Files are stored byte for byte as
published — factor counts depend on exact content, so nothing is stripped
or re-encoded.  Existing files are kept; re-run after an interrupted
download to fill in the gaps.

The corpus is intentionally not vendored in the repository: it is a few
hundred megabytes and licensing of the texts is easiest to respect by
pointing at the original distribution sites.
"""

import argparse
import gzip
import io
import shutil
import sys
import urllib.error
import urllib.request
import zipfile
from pathlib import Path

ZIP_SETS = {
    "canterbury": "https://corpus.canterbury.ac.nz/resources/cantrbry.zip",
    "calgary": "https://corpus.canterbury.ac.nz/resources/calgary.zip",
}

# name -> gzipped source paths, tried in order (mirror second).
PIZZACHILI = {
    "dblp.xml": "texts/xml/dblp.xml.gz",
    "dna": "texts/dna/dna.gz",
    "proteins": "texts/protein/proteins.gz",
    "sources": "texts/code/sources.gz",
}
PIZZACHILI_HOSTS = [
    "http://pizzachili.dcc.uchile.cl/",
    "http://pizzachili.di.unipi.it/",
]


def download(url: str) -> bytes:
    print(f"  fetching {url}")
    with urllib.request.urlopen(url, timeout=120) as response:
        return response.read()


def fetch_zip_set(name: str, url: str, dest: Path) -> None:
    target = dest / name
    target.mkdir(parents=True, exist_ok=True)
    try:
        payload = download(url)
    except (urllib.error.URLError, OSError) as exc:
        print(f"  {name}: download failed: {exc}", file=sys.stderr)
        return
    with zipfile.ZipFile(io.BytesIO(payload)) as archive:
        for info in archive.infolist():
            if info.is_dir():
                continue
            out = target / Path(info.filename).name
            if out.exists():
                print(f"  keeping existing {out}")
                continue
            with archive.open(info) as member, open(out, "wb") as handle:
                shutil.copyfileobj(member, handle)
            print(f"  wrote {out} ({out.stat().st_size} bytes)")


def fetch_pizzachili(dest: Path) -> None:
    target = dest / "pizzachili"
    target.mkdir(parents=True, exist_ok=True)
    for name, path in PIZZACHILI.items():
        out = target / name
        if out.exists():
            print(f"  keeping existing {out}")
            continue
        payload = None
        for host in PIZZACHILI_HOSTS:
            try:
                payload = download(host + path)
                break
            except (urllib.error.URLError, OSError) as exc:
                print(f"  {name}: {host}: {exc}", file=sys.stderr)
        if payload is None:
            print(f"  {name}: all mirrors failed", file=sys.stderr)
            continue
        data = gzip.decompress(payload)
        out.write_bytes(data)
        print(f"  wrote {out} ({len(data)} bytes)")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--dest",
        type=Path,
        default=Path(__file__).resolve().parent.parent / "corpus",
        help="directory to place the corpora in (default: ./corpus)",
    )
    parser.add_argument(
        "--sets",
        nargs="+",
        choices=[*ZIP_SETS, "pizzachili"],
        default=[*ZIP_SETS, "pizzachili"],
        help="which collections to fetch",
    )
    args = parser.parse_args()
    args.dest.mkdir(parents=True, exist_ok=True)
    for name in args.sets:
        print(f"{name}:")
        if name == "pizzachili":
            fetch_pizzachili(args.dest)
        else:
            fetch_zip_set(name, ZIP_SETS[name], args.dest)
    print(f"done; point GALOIS_CORPUS_DIR at {args.dest} or keep the default location")
    return 0


if __name__ == "__main__":
    sys.exit(main())
