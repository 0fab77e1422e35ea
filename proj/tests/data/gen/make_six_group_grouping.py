"""Builds a topic->group membership whose per-group sums hit fixed targets.

Only the six group totals are known, so membership is constructed by a
deterministic randomized greedy search over topic_frequencies.csv.
"""
import csv
import random
import sys

groups = [  # (group id, name, target count)
    (1, "command_exe_does_windows_powershell", 1044),
    (5, "exe_summarize_command_does_windows", 582),
    (0, "thank_hi_exe_windows_value", 559),
    (2, "thank_exe_thanks_formal_make", 294),
    (4, "correct_doing_does_team_sentence", 73),
    (3, "questions_topic_used_multiple_training", 36),
]

freq = {}
with open(sys.argv[1]) as f:
    for row in csv.DictReader(f):
        freq[int(row["topic"])] = int(row["frequency"])
assert sum(freq.values()) == sum(g[2] for g in groups) == 2588


def subset(topics, target, rng):
    # randomized greedy then exact fix-up via DP over remaining topics
    order = topics[:]
    rng.shuffle(order)
    reach = {0: []}
    for t in order:
        for s, members in list(reach.items()):
            n = s + freq[t]
            if n <= target and n not in reach:
                reach[n] = members + [t]
        if target in reach:
            return reach[target]
    return None


rng = random.Random(2588)
for attempt in range(1000):
    remaining = sorted(freq)
    assignment = {}
    ok = True
    for gid, name, target in sorted(groups, key=lambda g: g[2]):
        pick = subset(remaining, target, rng)
        if pick is None:
            ok = False
            break
        for t in pick:
            assignment[t] = (gid, name)
        remaining = [t for t in remaining if t not in pick]
    if ok and not remaining:
        break
else:
    raise SystemExit("no partition found")

w = csv.writer(sys.stdout, lineterminator="\n")
w.writerow(["topic", "group", "group_name"])
for t in sorted(assignment):
    w.writerow([t, *assignment[t]])
