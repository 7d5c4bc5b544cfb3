class UnionFind:
    """Union-find whose class representative is the element with the smallest rank key."""

    def __init__(self, items, key=None):
        self.parent = {x: x for x in items}
        self.key = key or {x: i for i, x in enumerate(self.parent)}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.key[y] < self.key[x]:
            x, y = y, x
        self.parent[y] = x

    def classes(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        classes = [sorted(c, key=self.key.__getitem__) for c in out.values()]
        return sorted(classes, key=lambda c: self.key[c[0]])
