import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from giraw.trees import (
    FREE_TREE_COUNTS,
    Tree,
    TreeError,
    TreeParseError,
    generate_free_trees,
    make_path,
    make_spider,
    make_star,
    parse_tree,
    reroot,
)

from oracles import free_tree_classes_by_prufer, tree_from_prufer


def labeled_trees(max_n: int = 8):
    return st.integers(2, max_n).flatmap(
        lambda n: st.lists(
            st.integers(0, n - 1), min_size=max(n - 2, 0), max_size=max(n - 2, 0)
        ).map(tree_from_prufer)
        if n > 2
        else st.just(Tree(n, tuple((i, i + 1) for i in range(n - 1))))
    )


class TestParse:
    def test_path_on_3(self):
        t = parse_tree("0 1\n1 2")
        assert t.n == 3
        assert t.diameter() == 2

    def test_star(self):
        t = parse_tree("0 1\n0 2\n0 3")
        assert t.degrees()[0] == 3

    def test_double_broom(self):
        t = parse_tree("0 1\n1 2\n2 3\n0 4\n0 5\n3 6\n3 7")
        assert t.n == 8
        assert sorted(t.degrees(), reverse=True)[:2] == [3, 3]
        assert t.diameter() == 5

    def test_comments_and_blank_lines(self):
        t = parse_tree("# a path\n0 1\n\n1 2  # tail edge\n")
        assert t.edges == ((0, 1), (1, 2))

    def test_single_vertex_from_empty_input(self):
        assert parse_tree("").n == 1

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("0 1\n2 3\n3 4\n4 2", "not connected"),
            ("0 1\n1 2\n2 0", "edges"),
            ("0 1\n0 1", "line 2"),
            ("0 0", "line 1"),
            ("0 x", "line 1"),
            ("0 1 2", "line 1"),
            ("0 -1", "line 1"),
        ],
    )
    def test_bad_input(self, text, fragment):
        with pytest.raises(TreeParseError) as exc:
            parse_tree(text)
        assert fragment in str(exc.value)

    def test_missing_vertex_id_is_disconnected(self):
        # ids 0 and 2 only: vertex 1 never appears, so 0..n-1 is not covered
        with pytest.raises(TreeParseError):
            parse_tree("0 2")

    @given(labeled_trees())
    def test_roundtrip(self, t):
        back = parse_tree(t.serialize())
        assert {frozenset(e) for e in back.edges} == {frozenset(e) for e in t.edges}


class TestConstructors:
    @pytest.mark.parametrize("a,n", [(0, 1), (1, 2), (3, 4)])
    def test_make_path(self, a, n):
        rt = make_path(a)
        assert rt.n == n
        assert rt.root == 0
        if a > 0:
            assert rt.tree.degrees()[rt.root] == 1

    def test_make_path_negative(self):
        with pytest.raises(TreeError):
            make_path(-1)

    def test_one_leg_spider_is_path(self):
        assert make_spider([3]).tree.canonical_form() == make_path(3).tree.canonical_form()

    def test_star(self):
        rt = make_star(3)
        assert rt.tree.n == 4
        assert rt.tree.degrees()[rt.root] == 3

    def test_spider_21_is_path_rooted_inside(self):
        rt = make_spider([2, 1])
        assert rt.tree.canonical_form() == make_path(3).tree.canonical_form()
        assert rt.tree.degrees()[rt.root] == 2

    def test_spider_rejects_empty_and_zero_legs(self):
        with pytest.raises(TreeError):
            make_spider([])
        with pytest.raises(TreeError):
            make_spider([2, 0])

    def test_spider_degree_shape(self):
        rt = make_spider([3, 2, 2])
        deg = rt.tree.degrees()
        assert deg[rt.root] == 3
        assert all(d <= 2 for v, d in enumerate(deg) if v != rt.root)


class TestGeneration:
    @pytest.mark.parametrize("n", range(1, 12))
    def test_counts_match_known_sequence(self, n):
        assert sum(1 for _ in generate_free_trees(n)) == FREE_TREE_COUNTS[n - 1]

    @pytest.mark.parametrize("n", [4, 7])
    def test_classes_match_prufer_oracle(self, n):
        generated = {t.canonical_form() for t in generate_free_trees(n)}
        assert generated == free_tree_classes_by_prufer(n)

    def test_pairwise_non_isomorphic(self):
        for n in range(1, 10):
            forms = [t.canonical_form() for t in generate_free_trees(n)]
            assert len(forms) == len(set(forms))

    def test_n_1(self):
        trees = list(generate_free_trees(1))
        assert len(trees) == 1 and trees[0].n == 1

    def test_out_of_range(self):
        with pytest.raises(TreeError):
            list(generate_free_trees(0))
        with pytest.raises(TreeError):
            list(generate_free_trees(99))

    def test_max_n_env_cap(self, monkeypatch):
        monkeypatch.setenv("GIRAW_MAX_N", "5")
        with pytest.raises(TreeError):
            list(generate_free_trees(6))
        assert sum(1 for _ in generate_free_trees(5)) == 3


class TestRooting:
    def test_reroot_out_of_range(self):
        with pytest.raises(TreeError):
            reroot(make_path(2).tree, 5)

    @given(labeled_trees(), st.data())
    @settings(max_examples=50)
    def test_every_nonroot_has_one_parent(self, t, data):
        root = data.draw(st.integers(0, t.n - 1))
        rt = reroot(t, root)
        parents = {}
        for v, kids in enumerate(rt.children):
            for c in kids:
                assert c not in parents
                parents[c] = v
        assert set(parents) == set(range(t.n)) - {root}

    @given(labeled_trees())
    def test_postorder_children_first(self, t):
        rt = reroot(t, 0)
        pos = {v: i for i, v in enumerate(rt.postorder())}
        for v, kids in enumerate(rt.children):
            for c in kids:
                assert pos[c] < pos[v]


class TestShapePredicates:
    def test_paths_and_stars_are_spiders(self):
        assert make_path(5).tree.is_spider()
        assert make_star(4).tree.is_spider()

    def test_double_broom_is_not_spider(self):
        t = parse_tree("0 1\n1 2\n2 3\n0 4\n0 5\n3 6\n3 7")
        assert not t.is_spider()

    def test_spider_legs(self):
        assert make_spider([3, 2, 1]).tree.spider_legs() == [3, 2, 1]

    def test_diameter(self):
        assert make_path(6).tree.diameter() == 6
        assert make_star(5).tree.diameter() == 2
        assert make_spider([2, 3]).tree.diameter() == 5
