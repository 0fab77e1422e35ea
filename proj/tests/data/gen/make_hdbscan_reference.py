"""Freezes reference density-clustering labels for the clustering tests.

Each fixture file holds one point per line (`c1,c2,...`, 17 significant
digits); the matching `.labels` file holds the reference labels for the
parameter set encoded in its name. Labels come from scikit-learn's HDBSCAN
(brute algorithm, euclidean metric).
"""
import numpy as np
from sklearn.cluster import HDBSCAN


def write_points(path, X):
    with open(path, "w") as f:
        for row in X:
            f.write(",".join(repr(float(v)) for v in row) + "\n")


def write_labels(path, labels):
    with open(path, "w") as f:
        for l in labels:
            f.write(f"{int(l)}\n")


def run(X, **kw):
    return HDBSCAN(algorithm="brute", **kw).fit(X).labels_


rng = np.random.default_rng(20231001)

# One tight blob and three far isolated points.
blob = np.vstack([rng.normal(0, 0.05, (40, 2)), [[10, 0], [0, 10], [-10, -10]]])
write_points("blob_outliers.points", blob)
write_labels("blob_outliers.mcs10.labels", run(blob, min_cluster_size=10))
write_labels("blob_outliers.mcs10.single_eps1.labels",
             run(blob, min_cluster_size=10, allow_single_cluster=True,
                 cluster_selection_epsilon=1.0))

# Blobs of unequal size and spread plus uniform background noise.
parts = [
    rng.normal([0, 0], 0.3, (80, 2)),
    rng.normal([4, 4], 0.6, (60, 2)),
    rng.normal([-4, 3], 0.2, (40, 2)),
    rng.normal([3, -4], 0.8, (50, 2)),
    rng.uniform(-8, 8, (30, 2)),
]
mixed = np.vstack(parts)
write_points("mixed2d.points", mixed)
write_labels("mixed2d.mcs10.labels", run(mixed, min_cluster_size=10))
# Tie-sensitive: the spanning tree has equal weights that np.argsort orders
# arbitrarily, so these labels are only compared up to a single point.
write_labels("mixed2d.mcs15_ms5.labels", run(mixed, min_cluster_size=15, min_samples=5))
write_labels("mixed2d.mcs5_ms3.labels", run(mixed, min_cluster_size=5, min_samples=3))
write_labels("mixed2d.mcs5_ms3.eps3.labels",
             run(mixed, min_cluster_size=5, min_samples=3, cluster_selection_epsilon=3.0))

# Five dimensions, three overlapping blobs.
centers = rng.normal(0, 2.0, (3, 5))
hd = np.vstack([rng.normal(c, 0.7, (70, 5)) for c in centers])
write_points("blobs5d.points", hd)
write_labels("blobs5d.mcs10.labels", run(hd, min_cluster_size=10))
write_labels("blobs5d.mcs20_ms10.labels", run(hd, min_cluster_size=20, min_samples=10))

for name in ["blob_outliers.mcs10", "blob_outliers.mcs10.single_eps1", "mixed2d.mcs10",
             "mixed2d.mcs15_ms5", "mixed2d.mcs5_ms3", "mixed2d.mcs5_ms3.eps3", "blobs5d.mcs10",
             "blobs5d.mcs20_ms10"]:
    l = np.loadtxt(name + ".labels", dtype=int)
    print(name, dict(zip(*np.unique(l, return_counts=True))))
