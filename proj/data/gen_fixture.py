#!/usr/bin/env python3
"""Regenerates the bundled fixture under data/fixture/.

The fixture is a synthetic 50-software catalog with 120 publications and a
small offline web archive (captures.cdx plus body files). It is shaped so
that the report stage reproduces the headline shares the pipeline is
validated against: 20 of 50 softwares archived, 12 of them with an in-year
capture, 11 of those changed afterwards, and a fixed category mix over the
20 profiled landing pages.

Run from the repository root:  python3 data/gen_fixture.py
The output is committed; rerunning must be a no-op diff.
"""

import base64
import hashlib
import json
import os
import shutil

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixture")

NAMES = [
    "SolverX", "MatForge", "PolyCrunch", "LinBeam", "SpectraFit",
    "GridWeave", "NumFlux", "AlgeNova", "TensorLoom", "PrimeScout",
    "GraphHive", "MeshRider", "OptimaCore", "FracTessa", "SymKernel",
    "QuadRanger", "EllipSim", "WaveFolder", "StencilPro", "KnotMatic",
    "CurveDancer", "RootHunter", "ModuForm", "LatticeJet", "SparseMill",
    "DualPivot", "RandWalker", "FlowMax", "IntervalAce", "ChaosTamer",
    "BifurcaScope", "HomotoPath", "SieveStorm", "GaloisDesk", "MarkovLoom",
    "PetriWorks", "SimplexJay", "TropiCalc", "MotiveEngine", "KaehlerBox",
    "ZetaProbe", "DeltaMesh", "GammaSolve", "ThetaGrid", "SigmaTrace",
    "OmegaRank", "EpsilonFit", "AxiomDen", "VectorNest", "ScalarPond",
]

# Classifier vocabulary; software names must not collide with any of these
# as substrings, since names appear in page headings.
BANNED_SUBSTRINGS = [
    "documentation", "manual", "user guide", "tutorial", "docs", "faq",
    "handbook", "reference", "publications", "papers", "bibliography",
    "cite", "references", "download", "install", "release", "source code",
    "git", "license", "news", "changelog", "change log", "release notes",
    "what's new", "history",
]

# Per-software plan: (year, kind, profile_flags, note)
#   kind: N = never captured, N404 = only non-OK captures,
#         A = captures outside the top year, PC = in-year + changed later,
#         PU = in-year + unchanged later
#   profile_flags: subset of "dplon" (documentation, publications,
#   downloads, open_source, updates_news) on the witness page
PLAN = [
    (1996, "A",    "",      ""),
    (1996, "N",    "",      ""),
    (1997, "N",    "",      ""),
    (1997, "N",    "",      ""),
    (1998, "PC",   "d",     ""),
    (1998, "N",    "",      ""),
    (1999, "N",    "",      ""),
    (1999, "N",    "",      ""),
    (2000, "A",    "",      "early_and_late"),
    (2000, "N",    "",      ""),
    (2001, "PC",   "d",     ""),
    (2001, "N",    "",      ""),
    (2002, "A",    "",      ""),
    (2002, "N",    "",      ""),
    (2003, "N",    "",      ""),
    (2004, "A",    "",      "path_url"),
    (2004, "N",    "",      ""),
    (2004, "N",    "",      ""),
    (2005, "PU",   "dl",    ""),
    (2005, "N",    "",      ""),
    (2006, "N",    "",      ""),
    (2006, "N",    "",      ""),
    (2007, "PC",   "dl",    "multiurl_old"),
    (2007, "A",    "",      ""),
    (2007, "N",    "",      ""),
    (2008, "N",    "",      ""),
    (2008, "N404", "",      ""),
    (2009, "PC",   "dp",    ""),
    (2009, "N",    "",      ""),
    (2010, "PC",   "dpl",   "multiurl_both"),
    (2010, "A",    "",      ""),
    (2010, "N",    "",      ""),
    (2011, "PC",   "dpl",   "year_boundary"),
    (2011, "N",    "",      ""),
    (2012, "PC",   "dplo",  "non_ok_extra"),
    (2012, "A",    "po",    "www_https"),
    (2012, "N",    "",      ""),
    (2013, "PC",   "dplon", "missing_early_body"),
    (2013, "PC",   "dp",    ""),
    (2013, "A",    "plo",   ""),
    (2013, "N404", "",      "keep_all_subject"),
    (2013, "N",    "",      ""),
    (2013, "N",    "",      ""),
    (2013, "N",    "",      ""),
    (2013, "N",    "",      ""),
    (2014, "PC",   "dplon", ""),
    (2014, "N",    "",      ""),
    (2014, "N",    "",      ""),
    (2015, "PC",   "dplo",  ""),
    (2015, "N",    "",      ""),
]

ALIAS_INDICES = {5, 12, 19, 26, 33, 40, 47}  # 1-based; alias = name + "Lite"


def surt(url):
    """SURT urlkey for the restricted URL shapes used in this fixture
    (http/https, optional www, optional simple path, no port/query)."""
    rest = url.split("://", 1)[1]
    host, slash, path = rest.partition("/")
    path = slash + path if slash else "/"
    labels = host.lower().split(".")
    if len(labels) > 1 and labels[0] == "www":
        labels = labels[1:]
    while len(path) > 1 and path.endswith("/"):
        path = path[:-1]
    return ",".join(reversed(labels)) + ")" + path


def digest_of(content):
    return base64.b32encode(hashlib.sha1(content.encode()).digest()).decode()


def page(name, swid, version, flags, year):
    lower = name.lower()
    lines = [
        "<!DOCTYPE html>",
        "<html>",
        "<head><title>%s</title></head>" % name,
        "<body>",
        "<h1>%s</h1>" % name,
        "<p>%s is a numerical toolkit for structured computations.</p>" % name,
        "<ul>",
        '  <li><a href="about.html">About</a></li>',
        '  <li><a href="contact.html">Contact</a></li>',
    ]
    if "d" in flags:
        lines.append('  <li><a href="manual.html">User Manual</a></li>')
    if "p" in flags:
        row_parity = int(swid[2:]) % 2
        if row_parity == 0:
            lines.append('  <li><a href="papers.html">Papers</a></li>')
        else:
            lines.append(
                '  <li><a href="https://doi.org/10.5555/%s">Journal article</a></li>' % swid)
    if "l" in flags:
        lines.append(
            '  <li><a href="files/%s-%d.0.tar.gz">Download</a></li>' % (lower, version))
    if "o" in flags:
        lines.append(
            '  <li><a href="https://github.com/mathsw/%s">Source code</a></li>' % lower)
    if "n" in flags:
        lines.append('  <li><a href="changelog.html">Changelog</a></li>')
    lines.append("</ul>")
    if version > 1:
        lines.append("<p>Version %d.0 came out in %d.</p>" % (version, year + version))
    lines.append("<p>Last updated %d-0%d-01.</p>" % (year + version - 1, version))
    lines.extend(["</body>", "</html>", ""])
    return "\n".join(lines)


def main():
    for name in NAMES:
        lowered = name.lower()
        for banned in BANNED_SUBSTRINGS:
            assert banned not in lowered, (name, banned)
    assert len(NAMES) == 50 and len(set(NAMES)) == 50
    assert len(PLAN) == 50

    softwares = []
    publications = []
    cdx = []          # (urlkey, timestamp, original, mimetype, status, digest, length)
    bodies = {}       # (urlkey, timestamp) -> content

    pub_counter = 0

    def add_pub(title, abstract, references, year, citations):
        nonlocal pub_counter
        pub_counter += 1
        pid = "p%03d" % pub_counter
        publications.append({
            "id": pid,
            "title": title,
            "abstract": abstract,
            "references": references,
            "year": year,
            "citations": citations,
        })
        return pid

    def add_capture(url, ts, status, content=None, mimetype="text/html",
                    digest=None, write_body=True):
        key = surt(url)
        if content is not None:
            digest = digest_of(content)
            length = str(len(content))
            if write_body:
                bodies[(key, ts)] = content
        else:
            assert digest is not None
            length = "-" if status == "-" else "512"
        cdx.append((key, ts, url, mimetype, str(status), digest, length))

    counts = {"archived": 0, "past": 0, "changed": 0}
    flag_totals = {c: 0 for c in "dplon"}

    for i, (year, kind, flags, note) in enumerate(PLAN, start=1):
        name = NAMES[i - 1]
        lower = name.lower()
        swid = "sw%03d" % i
        url = "http://%s.example.org/" % lower
        urls = [url]
        if note == "path_url":
            url = "http://%s.example.org/project/" % lower
            urls = [url]
        elif note == "www_https":
            url = "https://www.%s.example.org/" % lower
            urls = [url]
        elif note == "multiurl_old":
            old_url = "http://old.%s.example.net/tool" % lower
            urls = [url, old_url]
        elif note == "multiurl_both":
            second_url = "http://%s.example.net/" % lower
            urls = [url, second_url]

        alias = [name + "Lite"] if i in ALIAS_INDICES else []

        # --- publications -------------------------------------------------
        top_citations = 40 + (i * 7) % 60
        second_citations = 3 + i % 20
        third_citations = i % 7
        if i == 31:   # tie on citations, broken by earlier year
            top_citations = second_citations = 17
        if i == 32:   # tie on citations and year, broken by smaller id
            top_citations = second_citations = 9

        pid_top = add_pub(
            "%s: a fast solver for sparse polynomial systems" % name,
            "We present %s, a software package for large structured problems. "
            "Benchmarks against classical approaches show consistent gains." % name,
            ["Doe, J.: The %s system reference manual (%d)" % (name, year)],
            year, top_citations)
        second_year = year if i == 32 else year + (1 if i % 2 == 1 else 2)
        pid_second = add_pub(
            "On the convergence of block methods for structured matrices",
            "Building on %s we study convergence behaviour in several regimes "
            "and derive sharper bounds." % name,
            ["Roe, K.: Convergence of block methods, J. Numer. Anal. (%d)" % second_year],
            second_year, second_citations)
        pub_ids = [pid_top, pid_second]
        if i <= 20:
            mention_name = alias[0] if alias else name
            pid_third = add_pub(
                "A survey of preconditioning strategies",
                "We survey preconditioning strategies for iterative methods "
                "and report practical experience.",
                ["Lee, M.: %s user guide and library notes (%d)" % (mention_name, year - 1)],
                year - 1, third_citations)
            pub_ids.append(pid_third)

        softwares.append({
            "id": swid,
            "name": name,
            "aliases": alias,
            "urls": urls,
            "publication_ids": pub_ids,
        })

        # --- captures -----------------------------------------------------
        v1 = page(name, swid, 1, flags, year)
        v2 = page(name, swid, 2, flags, year)

        if kind == "N":
            continue
        if kind == "N404":
            add_capture(url, "%d1111000000" % (year + 2), 404,
                        digest=digest_of("404 not found " + swid))
            continue

        counts["archived"] += 1
        if kind == "A":
            if note == "early_and_late":
                add_capture(url, "%d0505060708" % (year - 2), 200,
                            content=page(name, swid, 1, flags, year - 2))
            add_capture(url, "%d0303030303" % (year + 3), 200, content=v1)
            for c in flags:
                flag_totals[c] += 1
            continue

        counts["past"] += 1
        for c in flags:
            flag_totals[c] += 1

        if kind == "PU":
            witness_ts = "%d0615081500" % year
            add_capture(url, witness_ts, 200, content=v1)
            # an identical recrawl two years on: a revisit record
            add_capture(url, "%d0301000000" % (year + 2), "-",
                        mimetype="warc/revisit", digest=digest_of(v1))
            continue

        counts["changed"] += 1
        if note == "year_boundary":
            add_capture(url, "%d1231235959" % year, 200, content=v1)
            add_capture(url, "%d0101000000" % (year + 1), 200, content=v2)
        elif note == "multiurl_old":
            add_capture(urls[1], "%d0714090000" % year, 200, content=v1)
            add_capture(urls[1], "%d1010101010" % (year + 2), 200, content=v2)
        elif note == "multiurl_both":
            add_capture(urls[0], "%d0808120000" % year, 200, content=v1)
            add_capture(urls[1], "%d0303040506" % (year + 2), 200, content=v2)
        elif note == "non_ok_extra":
            add_capture(url, "%d0610120000" % year, 200, content=v1)
            add_capture(url, "%d1115000000" % year, 302,
                        digest=digest_of("302 moved " + swid))
            add_capture(url, "%d0505101010" % (year + 2), 200, content=v2)
        elif note == "missing_early_body":
            add_capture(url, "%d0315102000" % year, 200,
                        digest=digest_of("lost crawl " + swid), write_body=False)
            add_capture(url, "%d1120160000" % year, 200, content=v1)
            add_capture(url, "%d0601000000" % (year + 2), 200, content=v2)
        else:
            add_capture(url, "%d0920143000" % year, 200, content=v1)
            add_capture(url, "%d0301091500" % (year + 2), 200, content=v2)

    # --- consistency against the shape the reports are checked for --------
    assert pub_counter == 120, pub_counter
    assert counts == {"archived": 20, "past": 12, "changed": 11}, counts
    assert flag_totals == {"d": 12, "p": 10, "l": 9, "o": 6, "n": 2}, flag_totals

    # --- write everything --------------------------------------------------
    archive_dir = os.path.join(ROOT, "archive")
    if os.path.isdir(archive_dir):
        shutil.rmtree(archive_dir)
    os.makedirs(os.path.join(archive_dir, "bodies"))

    with open(os.path.join(ROOT, "software.jsonl"), "w") as f:
        for sw in softwares:
            f.write(json.dumps(sw) + "\n")
    with open(os.path.join(ROOT, "publications.jsonl"), "w") as f:
        for pub in publications:
            f.write(json.dumps(pub) + "\n")

    cdx.sort(key=lambda row: (row[0], row[1]))
    with open(os.path.join(archive_dir, "captures.cdx"), "w") as f:
        for row in cdx:
            f.write(" ".join(row) + "\n")

    for (key, ts), content in bodies.items():
        body_dir = os.path.join(archive_dir, "bodies", key.replace("/", "_"))
        os.makedirs(body_dir, exist_ok=True)
        with open(os.path.join(body_dir, ts + ".html"), "w") as f:
            f.write(content)

    print("fixture: %d softwares, %d publications, %d cdx lines, %d bodies"
          % (len(softwares), len(publications), len(cdx), len(bodies)))


if __name__ == "__main__":
    main()
