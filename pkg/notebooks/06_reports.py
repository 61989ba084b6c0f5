"""Text format, JSON reports and the reproduction table.

The same things are available from the shell:

    submanet fixture D4 --emit > d4.txt
    submanet analyze d4.txt --json
    submanet reproduce --fixture ALL
"""
from submanet import analyze, load_report, parse_graph, reproduce, serialize_graph

text = """
# a small network
arc s a
arc s b
arc a t
arc b t
"""
D = parse_graph(text)
print(serialize_graph(D))

report = analyze(D)
print(report.dumps()[:400], "...")

# re-validate every certificate from the JSON alone
again = load_report(report.dumps())
print(again.invariants)

result = reproduce("D3")
print(result.format_text())
