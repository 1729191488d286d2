"""Smoke test for the qfact extension module."""

import qfact


def main():
    p = qfact.Polynomial("A3; w[1,3] w[2,0] w[3,3]")
    assert str(p) == "A3; w[1,3] w[2,0] w[3,3]"
    assert p.rank == 3 and p.degree == 3
    assert p.support() == [1, 2, 3]
    assert not qfact.has_snake_support(p)

    status, factors = qfact.factorize(p)
    assert status == "prime" and factors == [p]

    g = qfact.Graph.qfact(p)
    assert len(g) == 3
    assert sorted(g.arrows()) == [(0, 1), (2, 1)]
    assert not g.is_totally_ordered()
    assert g.mtos() == [[0, 1], [1, 2]]
    assert 'label="kr(1,3,1)#0"' in g.dot()

    q = qfact.parse("A3; w[1,3]^2 w[2,0]")
    status, factors = qfact.factorize(q)
    assert status == "snake-support-route"
    assert sorted(map(str, factors)) == ["A3; w[1,3]", "A3; w[1,3] w[2,0]"]

    r = qfact.parse("A1; w[1,0] w[1,2] w[1,6]")
    assert [(k.i, k.a, k.r) for k in qfact.q_factorization(r)] == [(1, 1, 2), (1, 6, 1)]
    fused = qfact.Graph.fund(r).fuse(0, 1)
    assert fused.polynomial() == r and len(fused) == 2

    assert qfact.is_prime_snake(qfact.parse("A3; w[1,0] w[2,3]"))
    assert qfact.KrFactor(2, 1, 2).expand(3) == qfact.parse("A3; w[2,0] w[2,2]")
    assert p.bar() == p and str(p.dual()) == "A3; w[1,-1] w[2,-4] w[3,-1]"

    try:
        qfact.parse("A3; w[4,0]")
    except ValueError as e:
        assert "byte 6" in str(e)
    else:
        raise AssertionError("parse error expected")
    print("smoke test passed")


if __name__ == "__main__":
    main()
