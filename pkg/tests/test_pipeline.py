import json
import shutil

import pytest

from petinduce import pipeline
from petinduce.errors import RationalAlpha
from petinduce.exactfield import FieldElem, PHI, parse, phi_power
from petinduce.geometry import box
from petinduce.words import Morphism2D, Word2D


class TestChain:
    def test_alphabet_sizes(self, chain):
        sizes = chain.alphabet_sizes()
        assert [sizes[f"P{i}"] for i in (1, 3, 4, 5, 6, 7, 8, 9, 10)] == [28, 20, 20, 22, 18, 21, 19, 21, 19]

    def test_orientations(self, chain):
        orient = {s.name: s.orientation for s in chain.steps}
        assert [n for n, o in orient.items() if o == "column"] == ["beta0", "beta4", "beta6", "beta8"]

    def test_every_partition_tiles(self, chain):
        for P in chain.partitions.values():
            P.validate()

    def test_generators_are_pets(self, chain):
        for gens in chain.generators.values():
            for T in gens:
                T.validate()

    def test_r8_translations(self, chain):
        # x + (-phi^-3, 0) n1 + (0, phi^-2) n2 on [0, phi^-1) x [0, 1)
        R8e1, R8e2 = chain.generators["R8"]
        assert chain.partitions["P8"].domain == box([0, 0], [phi_power(-1), 1])
        a, b = -phi_power(-3), phi_power(-2)
        assert {t[0] for t in R8e1.translations.values()} <= {a, a + phi_power(-1)}
        assert {t[1] for t in R8e1.translations.values()} == {0}
        assert {t[1] for t in R8e2.translations.values()} <= {b, b - 1}
        assert {t[0] for t in R8e2.translations.values()} == {0}

    def test_self_induction_fixed_point(self, chain):
        perm = pipeline.rerun_self_induction(chain)
        assert sorted(perm) == sorted(perm.values()) == list(range(19))


class TestVerification:
    def test_all_tables(self, chain, expected):
        rep = pipeline.verify_chain(chain, expected)
        assert [c.name for c in rep.tables] == pipeline.TABLE_NAMES + ["tau", "zeta", "omega_U"]
        assert all(c.ok for c in rep.tables), rep.text()
        assert rep.ok

    def test_injected_fault_is_named(self, chain, expected):
        imgs = dict(expected.morphisms["beta0"].images)
        w = imgs[0]
        imgs[0] = Word2D.column((w.cols[0][0] + 1,) + w.cols[0][1:])
        broken = pipeline.ExpectedTables(dict(expected.morphisms, beta0=Morphism2D(imgs)),
                                         expected.tau, expected.zeta)
        rep = pipeline.verify_chain(chain, broken)
        assert rep.first_failure().name == "beta0"
        assert "0" in rep.first_failure().detail

    def test_wrong_zeta(self, chain, expected):
        z = dict(expected.zeta)
        z[0], z[1] = z[1], z[0]
        broken = pipeline.ExpectedTables(expected.morphisms, expected.tau, z)
        rep = pipeline.verify_chain(chain, broken)
        assert rep.first_failure().name == "zeta"
        assert "0, 1" in rep.first_failure().detail

    def test_zeta_geometry(self, chain, expected):
        res = pipeline.verify_conjugacy_to_U(chain, expected)
        assert res.ok, res.detail
        PU = pipeline.p_u(chain, expected.zeta)
        assert PU.domain == box([0, 0], [1, 1])
        assert sorted(PU.labels()) == list(range(19))

    def test_zeta_not_a_permutation(self, chain, expected):
        z = dict(expected.zeta)
        z[0] = z[1]
        assert not pipeline.conjugacy_to_U(chain, z).ok

    def test_return_times(self):
        assert pipeline.verify_return_times(200, seed=1) == {"e1": [1], "e2": [4, 5]}

    def test_shear(self, chain):
        assert pipeline.verify_shear(chain, n_samples=10) == (10, 0)

    def test_desubstitution_all_steps(self, chain):
        for step in chain.steps:
            assert pipeline.desubstitution_check(chain, step, n_samples=10) == (10, 0)

    def test_desubstitution_detects_a_wrong_morphism(self, chain):
        step = chain.steps[0]
        good = chain.morphisms["beta0"]
        imgs = dict(good.images)
        imgs[0], imgs[1] = imgs[1], imgs[0]
        chain.morphisms["beta0"] = Morphism2D(imgs)
        try:
            _, bad = pipeline.desubstitution_check(chain, step, n_samples=30)
        finally:
            chain.morphisms["beta0"] = good
        assert bad > 0

    def test_rescalings(self, chain):
        for src, _ in chain.rescalings:
            assert pipeline.rescaling_check(chain, src, n_samples=10) == (10, 0)

    def test_report_json(self, chain, expected):
        rep = pipeline.full_report(chain, expected, shear=False, desub_samples=0)
        obj = json.loads(json.dumps(rep.to_json()))
        assert obj["ok"] and len(obj["tables"]) == 12


class TestData:
    def test_override_directory(self, tmp_path, monkeypatch):
        for f in ("p0.json", "expected_tables.json"):
            shutil.copy(pipeline.data_dir() / f, tmp_path / f)
        raw = json.loads((tmp_path / "expected_tables.json").read_text())
        raw["tau"]["0"] = 7
        (tmp_path / "expected_tables.json").write_text(json.dumps(raw))
        monkeypatch.setenv("PETINDUCE_DATA", str(tmp_path))
        assert pipeline.data_dir() == tmp_path
        assert pipeline.load_expected().tau[0] == 7

    def test_golden_letter_counts(self, expected):
        counts = [len(expected.morphisms[n]) for n in pipeline.TABLE_NAMES]
        assert counts == [28, 20, 20, 22, 18, 21, 19, 21, 19]
        assert len(expected.tau) == len(expected.zeta) == 19


class TestSturmian:
    def test_appendix_alpha(self):
        alpha = FieldElem(parse("186/55").a, parse("3/55*phi").b)
        digits, subs = pipeline.sturmian_chain(alpha, 7)
        assert digits == [3, 2, 7, 1, 5, 1, 5]
        assert subs[0] == {"L": "L", "R": "LLLR"}
        assert subs[1] == {"L": "LRR", "R": "R"}

    def test_golden_mean(self):
        digits, _ = pipeline.sturmian_chain(PHI, 12)
        assert digits == [1] * 12

    def test_other_quadratics(self):
        # frozen from sympy continued fractions
        assert pipeline.sturmian_chain(2 * PHI, 6)[0] == [3, 4, 4, 4, 4, 4]
        assert pipeline.sturmian_chain(parse("1/2+1/3*phi"), 6)[0] == [1, 25, 2, 2, 2, 26]
        assert pipeline.sturmian_chain(PHI - 1, 3)[0] == [0, 1, 1]

    def test_zero_steps(self):
        assert pipeline.sturmian_chain(PHI, 0) == ([], [])

    def test_rational(self):
        with pytest.raises(RationalAlpha) as info:
            pipeline.sturmian_chain(FieldElem(2), 3)
        assert info.value.digits == [2]
        assert pipeline.sturmian_chain(FieldElem(2), 1)[0] == [2]

    def test_nonpositive(self):
        with pytest.raises(ValueError):
            pipeline.sturmian_chain(-PHI, 3)

    def test_tau_powers(self):
        assert pipeline.tau_power(0, 1) == {"L": "L", "R": "LR"}
        assert pipeline.tau_power(1, 1) == {"L": "LR", "R": "R"}
        assert pipeline.tau_power(4, 0) == {"L": "L", "R": "R"}

    def test_cf_digits_agree(self):
        alpha = parse("186/55+3/55*phi")
        assert pipeline.cf_digits(alpha, 9) == pipeline.sturmian_chain(alpha, 9, cross_validate=False)[0]
