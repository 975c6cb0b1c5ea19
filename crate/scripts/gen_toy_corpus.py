#!/usr/bin/env python3
"""Generate the bundled toy corpus of synthetic Java-like projects.

Usage: python3 scripts/gen_toy_corpus.py data/toy_corpus

Output is deterministic for a fixed seed.
"""
import os
import random
import sys

SEED = 20210527

PROJECTS = {
    "cassia": ["Acl", "Entry", "Permission", "Storage", "Inode", "Feature"],
    "elastic": ["Index", "Shard", "Query", "Document", "Mapping", "Cluster"],
    "gradle": ["Task", "Project", "Plugin", "Dependency", "Artifact", "Config"],
    "hadoop": ["Block", "Node", "Replica", "Lease", "Volume", "Report"],
    "kafka": ["Topic", "Partition", "Record", "Offset", "Consumer", "Producer"],
}

TYPES = ["int", "long", "String", "boolean", "double"]
VERBS = ["get", "set", "update", "remove", "create", "find", "load", "check"]
HELPERS = ["result", "value", "count", "index", "entries", "builder", "buffer", "config"]
COMMENTS = [
    "// TODO: revisit this",
    "// fast path",
    "// keep in sync with the reader",
    "// 初始化 cache",
]


def camel(parts):
    return parts[0].lower() + "".join(p[:1].upper() + p[1:] for p in parts[1:])


def field_decl(rng, nouns):
    t = rng.choice(TYPES)
    name = camel([rng.choice(nouns), rng.choice(["Count", "Name", "Id", "Size", "Enabled"])])
    return t, name


def default_value(t):
    return {"int": "0", "long": "0L", "String": '""', "boolean": "false", "double": "0.0"}[t]


def gen_method_body(rng, cls, fields, nouns, indent):
    lines = []
    n = rng.randint(3, 9)
    list_name = camel([rng.choice(nouns), "Entries"])
    lines.append(f"{indent}List<{cls}> {list_name} = new ArrayList<>();")
    for _ in range(n):
        kind = rng.random()
        t, fname = rng.choice(fields)
        if kind < 0.25:
            lines.append(f"{indent}if ({fname} != null) {{")
            lines.append(f"{indent}    {list_name}.add(new {cls}({fname}));")
            lines.append(f"{indent}}}")
        elif kind < 0.45:
            helper = rng.choice(HELPERS)
            lines.append(f"{indent}int {helper} = {list_name}.size();")
        elif kind < 0.6:
            lines.append(f"{indent}for ({cls} entry : {list_name}) {{")
            lines.append(f"{indent}    result.append(entry.get{fname[:1].upper() + fname[1:]}());")
            lines.append(f"{indent}}}")
        elif kind < 0.75:
            other = rng.choice(nouns)
            lines.append(f"{indent}{list_name}.add({camel(['create', other])}({fname}));")
        elif kind < 0.85:
            c = rng.choice(COMMENTS)
            lines.append(f"{indent}this.{fname} = {fname}; {c}")
        else:
            lines.append(f'{indent}LOG.debug("processing {cls} " + {fname});')
    lines.append(f"{indent}return {list_name};")
    return lines


def gen_file(rng, project, nouns, cls):
    out = []
    out.append("/*")
    out.append(" * Licensed to the Apache Software Foundation (ASF) under one")
    out.append(" * or more contributor license agreements. Version 2.0 of the License.")
    out.append(" */")
    out.append(f"package org.apache.{project}.{rng.choice(nouns).lower()};")
    out.append("")
    imports = ["java.util.List", "java.util.ArrayList", "java.util.Map", "java.util.HashMap"]
    imports += [f"org.apache.{project}.service.{n}Manager" for n in rng.sample(nouns, 2)]
    for imp in imports:
        out.append(f"import {imp};")
    out.append("")
    out.append("/**")
    out.append(f" * Manages {cls} instances for the {project} service.")
    out.append(" */")
    out.append(f"public class {cls} {{")
    out.append(f"    private static final Logger LOG = LoggerFactory.getLogger({cls}.class);")
    fields = []
    for _ in range(rng.randint(2, 4)):
        t, name = field_decl(rng, nouns)
        if name in [f for _, f in fields]:
            continue
        fields.append((t, name))
        out.append(f"    private {t} {name} = {default_value(t)};")
    if rng.random() < 0.4:
        long_lit = "".join(rng.choice("abcdefghijklmnopqrstuvwxyz0123456789") for _ in range(48))
        out.append(f'    private static final String SECRET_KEY = "{long_lit}";')
    out.append("")
    out.append(f"    public {cls}() {{")
    out.append("    }")
    for t, name in fields:
        cap = name[:1].upper() + name[1:]
        out.append("")
        out.append(f"    public {t} get{cap}() {{")
        out.append(f"        return {name};")
        out.append("    }")
        out.append("")
        out.append(f"    public void set{cap}({t} {name}) {{")
        out.append(f"        this.{name} = {name};")
        out.append("    }")
    for _ in range(rng.randint(1, 2)):
        verb = rng.choice(VERBS)
        noun = rng.choice(nouns)
        mname = camel([verb, noun, "Entries"])
        out.append("")
        if rng.random() < 0.6:
            out.append(f"    // {verb} all {noun.lower()} entries")
        out.append(f"    public List<{cls}> {mname}(Map<String, {cls}> {noun.lower()}Map) {{")
        out.append("        StringBuilder result = new StringBuilder();")
        out.extend(gen_method_body(rng, cls, fields, nouns, "        "))
        out.append("    }")
    out.append("")
    out.append("    @Override")
    out.append("    public String toString() {")
    out.append(f'        return "{cls}";')
    out.append("    }")
    out.append("}")
    return "\n".join(out) + "\n"


def main():
    root = sys.argv[1] if len(sys.argv) > 1 else "data/toy_corpus"
    rng = random.Random(SEED)
    for project, nouns in PROJECTS.items():
        base = os.path.join(root, project, "src")
        os.makedirs(base, exist_ok=True)
        used = set()
        made = 0
        while made < 10:
            a, b = rng.sample(nouns, 2)
            cls = a + b
            if cls in used:
                continue
            used.add(cls)
            with open(os.path.join(base, cls + ".java"), "w", encoding="utf-8") as f:
                f.write(gen_file(rng, project, nouns, cls))
            made += 1
        # one test file per project, dropped by the file filter
        with open(os.path.join(base, nouns[0] + "Test.java"), "w", encoding="utf-8") as f:
            f.write(gen_file(rng, project, nouns, nouns[0] + "Test"))


if __name__ == "__main__":
    main()
