"""Regenerates data/groups/*.json and data/tables/*.json."""
import itertools
import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent / "data"


def cycles(n, *cyc):
    img = list(range(n))
    for c in cyc:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a] = b
    return img


def quaternion_regular():
    # basis 1, i, j, k with sign; index = 2 * basis + (sign < 0)
    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }

    def right_mult(b):
        img = []
        for idx in range(8):
            a, neg = divmod(idx, 2)
            s, c = table[(a, b)]
            if neg:
                s = -s
            img.append(2 * c + (1 if s < 0 else 0))
        return img

    return [right_mult(1), right_mult(2)]


def sl23():
    vecs = [v for v in itertools.product(range(3), repeat=2) if v != (0, 0)]

    def act(m):
        out = []
        for x, y in vecs:
            w = ((x * m[0][0] + y * m[1][0]) % 3, (x * m[0][1] + y * m[1][1]) % 3)
            out.append(vecs.index(w))
        return out

    return [act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])]


GROUPS = {
    "s3": (3, [cycles(3, [0, 1, 2]), cycles(3, [0, 1])]),
    "a4": (4, [cycles(4, [0, 1, 2]), cycles(4, [0, 1], [2, 3])]),
    "c7c3": (7, [cycles(7, [0, 1, 2, 3, 4, 5, 6]), cycles(7, [1, 2, 4], [3, 6, 5])]),
    "d8": (4, [cycles(4, [0, 1, 2, 3]), cycles(4, [0, 2])]),
    "q8": (8, quaternion_regular()),
    "sl23": (8, sl23()),
    "a7": (7, [cycles(7, [0, 1, k]) for k in range(2, 7)]),
}

NAMES = {"s3": "S3", "a4": "A4", "c7c3": "C7:C3", "d8": "D8", "q8": "Q8",
         "sl23": "SL(2,3)", "a7": "A7"}


def z(n, *ks, c=1):
    coeffs = {}
    for k in ks:
        coeffs[str(k)] = coeffs.get(str(k), 0) + c
    return {"conductor": n, "coeffs": coeffs}


W, W2 = z(3, 1), z(3, 2)
MW, MW2 = z(3, 1, c=-1), z(3, 2, c=-1)
B7, B7C = z(7, 1, 2, 4), z(7, 3, 5, 6)


def classes(spec):
    return [{"name": n, "size": s, "order": o} for n, s, o in spec]


TABLES = {
    "s3": {
        "group_order": 6,
        "classes": classes([("1a", 1, 1), ("2a", 3, 2), ("3a", 2, 3)]),
        "power_maps": {"2": [0, 0, 2], "3": [0, 1, 0]},
        "characters": [[1, 1, 1], [1, -1, 1], [2, 0, -1]],
        "schur_indices": [1, 1, 1],
    },
    "a4": {
        "group_order": 12,
        "classes": classes([("1a", 1, 1), ("2a", 3, 2), ("3a", 4, 3), ("3b", 4, 3)]),
        "power_maps": {"2": [0, 0, 3, 2], "3": [0, 1, 0, 0]},
        "characters": [[1, 1, 1, 1], [1, 1, W, W2], [1, 1, W2, W], [3, -1, 0, 0]],
        "schur_indices": [1, 1, 1, 1],
    },
    "c7c3": {
        "group_order": 21,
        "classes": classes([("1a", 1, 1), ("3a", 7, 3), ("3b", 7, 3), ("7a", 3, 7), ("7b", 3, 7)]),
        "power_maps": {"2": [0, 2, 1, 3, 4], "3": [0, 0, 0, 4, 3], "7": [0, 1, 2, 0, 0]},
        "characters": [[1, 1, 1, 1, 1], [1, W, W2, 1, 1], [1, W2, W, 1, 1],
                       [3, 0, 0, B7, B7C], [3, 0, 0, B7C, B7]],
        "schur_indices": [1, 1, 1, 1, 1],
    },
    "d8": {
        "group_order": 8,
        "classes": classes([("1a", 1, 1), ("2a", 1, 2), ("2b", 2, 2), ("2c", 2, 2), ("4a", 2, 4)]),
        "power_maps": {"2": [0, 0, 0, 0, 1]},
        "characters": [[1, 1, 1, 1, 1], [1, 1, 1, -1, -1], [1, 1, -1, 1, -1],
                       [1, 1, -1, -1, 1], [2, -2, 0, 0, 0]],
        "schur_indices": [1, 1, 1, 1, 1],
    },
    "q8": {
        "group_order": 8,
        "classes": classes([("1a", 1, 1), ("2a", 1, 2), ("4a", 2, 4), ("4b", 2, 4), ("4c", 2, 4)]),
        "power_maps": {"2": [0, 0, 1, 1, 1]},
        "characters": [[1, 1, 1, 1, 1], [1, 1, 1, -1, -1], [1, 1, -1, 1, -1],
                       [1, 1, -1, -1, 1], [2, -2, 0, 0, 0]],
        "schur_indices": [1, 1, 1, 1, 2],
    },
    "sl23": {
        "group_order": 24,
        "classes": classes([("1a", 1, 1), ("2a", 1, 2), ("3a", 4, 3), ("3b", 4, 3),
                            ("4a", 6, 4), ("6a", 4, 6), ("6b", 4, 6)]),
        "power_maps": {"2": [0, 0, 3, 2, 1, 3, 2], "3": [0, 1, 0, 0, 4, 1, 1]},
        "characters": [[1, 1, 1, 1, 1, 1, 1],
                       [1, 1, W, W2, 1, W, W2],
                       [1, 1, W2, W, 1, W2, W],
                       [3, 3, 0, 0, -1, 0, 0],
                       [2, -2, -1, -1, 0, 1, 1],
                       [2, -2, MW, MW2, 0, W, W2],
                       [2, -2, MW2, MW, 0, W2, W]],
        "schur_indices": [1, 1, 1, 1, 2, 1, 1],
    },
    "a7": {
        "group_order": 2520,
        "classes": classes([("1a", 1, 1), ("2a", 105, 2), ("3a", 70, 3), ("3b", 280, 3),
                            ("4a", 630, 4), ("5a", 504, 5), ("6a", 210, 6),
                            ("7a", 360, 7), ("7b", 360, 7)]),
        "power_maps": {"2": [0, 0, 2, 3, 1, 5, 2, 7, 8], "3": [0, 1, 0, 0, 4, 5, 1, 8, 7],
                       "5": [0, 1, 2, 3, 4, 0, 6, 8, 7], "7": [0, 1, 2, 3, 4, 5, 6, 0, 0]},
        "characters": [[1, 1, 1, 1, 1, 1, 1, 1, 1],
                       [6, 2, 3, 0, 0, 1, -1, -1, -1],
                       [10, -2, 1, 1, 0, 0, 1, B7, B7C],
                       [10, -2, 1, 1, 0, 0, 1, B7C, B7],
                       [14, 2, 2, -1, 0, -1, 2, 0, 0],
                       [14, 2, -1, 2, 0, -1, -1, 0, 0],
                       [15, -1, 3, 0, -1, 0, -1, 1, 1],
                       [21, 1, -3, 0, -1, 1, 1, 0, 0],
                       [35, -1, -1, -1, 1, 0, -1, 0, 0]],
        "schur_indices": [1, 1, 1, 1, 1, 1, 1, 1, 1],
    },
}


def main():
    (ROOT / "groups").mkdir(parents=True, exist_ok=True)
    (ROOT / "tables").mkdir(parents=True, exist_ok=True)
    for key, (deg, gens) in GROUPS.items():
        doc = {"name": NAMES[key], "degree": deg, "generators": gens}
        (ROOT / "groups" / f"{key}.json").write_text(json.dumps(doc, indent=1) + "\n")
    for key, tab in TABLES.items():
        doc = {"name": NAMES[key], **tab}
        (ROOT / "tables" / f"{key}.json").write_text(json.dumps(doc, indent=1) + "\n")


if __name__ == "__main__":
    main()
