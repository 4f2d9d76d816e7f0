# Copyright 2026 The cloudmatch Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Parses the exported Turtle with rdflib and checks individual counts."""

import json
import subprocess
import sys

import rdflib

COCOON = rdflib.Namespace("http://w3c.org.au/cocoon.owl#")


def main(tool, catalog_path):
    text = subprocess.run([tool, "export", "--catalog", catalog_path, "--format", "turtle"],
                          check=True, capture_output=True, text=True).stdout
    graph = rdflib.Graph()
    graph.parse(data=text, format="turtle")

    with open(catalog_path) as f:
        catalog = json.load(f)
    expected = sum(len(catalog.get(kind, [])) for kind in ("compute", "storage", "network"))

    typed = set()
    for cls in (COCOON.Compute, COCOON.Storage, COCOON.Network):
        typed.update(s for s in graph.subjects(rdflib.RDF.type, cls) if isinstance(s, rdflib.URIRef))
    attach = list(graph.triples((None, COCOON.isAttachable, None)))

    print(f"{len(graph)} triples, {len(typed)} typed offers, {len(attach)} isAttachable links")
    if len(typed) != expected:
        print(f"expected {expected} typed offers", file=sys.stderr)
        return 1
    if not attach:
        print("no isAttachable links", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
