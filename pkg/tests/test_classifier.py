import pytest

from symlab.classifier import check_flux_invertibility, classify
from symlab.classifier.principles import LINEAR_FLUX, LOCAL_FORM
from symlab.equations import get_equation, spec_from_dict
from symlab.models import LocalFluxView, Parity, Prediction, Principle
from symlab.symbols import reflect_symbol

EXPECTED = {
    'kdv': (Principle.P1, Prediction.TRAVELING_WAVE),
    'bbm': (Principle.P1, Prediction.TRAVELING_WAVE),
    'whitham': (Principle.P1, Prediction.TRAVELING_WAVE),
    'benjamin_ono': (Principle.P1, Prediction.TRAVELING_WAVE),
    'hirota_satsuma': (Principle.P1, Prediction.TRAVELING_WAVE),
    'bidirectional_whitham': (Principle.P1, Prediction.TRAVELING_WAVE),
    'camassa_holm': (Principle.P1, Prediction.TRAVELING_WAVE),
    'kawahara': (Principle.P1, Prediction.TRAVELING_WAVE),
    'ostrovsky': (Principle.P1, Prediction.TRAVELING_WAVE),
    'heat': (Principle.P2, Prediction.FIXED_AXIS),
    'keller_segel_1d_analogue': (Principle.P2, Prediction.FIXED_AXIS),
    'cahn_hilliard': (Principle.P2, Prediction.FIXED_AXIS),
    'cahn_hilliard_linearized': (Principle.P2, Prediction.FIXED_AXIS),
    'fisher_kpp': (Principle.P2, Prediction.FIXED_AXIS),
    'porous_medium': (Principle.P2, Prediction.FIXED_AXIS),
    'fast_diffusion': (Principle.P2, Prediction.FIXED_AXIS),
    'thin_film': (Principle.P2, Prediction.FIXED_AXIS),
    'burgers': (Principle.P3_STRONG, Prediction.CONSTANT_IN_SPACE_TIME),
    'kuramoto_sivashinsky': (Principle.P3_STRONG, Prediction.CONSTANT_IN_SPACE_TIME),
    'kdv_burgers': (Principle.P3_WEAK, Prediction.STEADY_SUBEQUATION),
}


def scalar(terms, left='1'):
    return spec_from_dict({'name': 'inline', 'left': [left], 'terms': terms})


class TestCatalogLabels(object):

    @pytest.mark.parametrize('name', sorted(EXPECTED))
    def test_label(self, name):
        report = classify(get_equation(name))
        assert (report.label, report.predicted) == EXPECTED[name]

    def test_one_line_rows(self):
        assert classify(get_equation('kdv')).one_line() == 'kdv | 1 | P1 | TravelingWave'
        assert classify(get_equation('burgers')).one_line() == \
            'burgers | 1 | P3_strong | ConstantInSpaceTime'
        assert classify(get_equation('keller_segel_1d_analogue')).one_line() == \
            'keller_segel_1d_analogue | 2 | P2 | FixedAxis (classify_only)'

    def test_component_parities(self):
        report = classify(get_equation('hirota_satsuma'))
        assert [c.left for c in report.components] == [Parity.EVEN, Parity.EVEN]
        assert all(p is Parity.ODD for c in report.components for p in c.terms)

    def test_local_form_entries_say_so(self):
        report = classify(get_equation('thin_film'))
        assert report.local_form
        assert LOCAL_FORM in report.notes

    def test_weak_label_lists_steady_terms(self):
        report = classify(get_equation('kdv_burgers'))
        assert len(report.steady_terms) == 2
        assert report.citations

    def test_report_document(self):
        document = classify(get_equation('burgers')).to_dict()
        assert document['label'] == 'P3_strong'
        assert document['flux']['coefficients'] == [0.0, 0.0, 0.5]
        assert document['components'][0]['terms'] == ['odd', 'even']


class TestMixedParity(object):

    def test_linear_flux_falls_back_to_weak(self):
        # u_t = u_x + u_xx: travelling cos(x + t) is symmetric at every time
        report = classify(scalar([
            {'outer': 'i*xi', 'factors': [{}]},
            {'outer': '(i*xi)^2', 'factors': [{}]},
        ]))
        assert report.label is Principle.P3_WEAK
        assert LINEAR_FLUX in report.notes

    def test_even_part_without_derivative(self):
        # u_t = (u^2)_x - u
        report = classify(scalar([
            {'outer': 'i*xi', 'factors': [{}, {}]},
            {'coefficient': -1.0, 'outer': '1', 'factors': [{}]},
        ]))
        assert report.label is Principle.P3_STRONG
        assert report.predicted is Prediction.CONSTANT_IN_SPACE

    def test_nonconstant_left_symbol_is_weak(self):
        report = classify(scalar([
            {'outer': 'i*xi', 'factors': [{}, {}]},
            {'outer': '(i*xi)^2', 'factors': [{}]},
        ], left='1+xi^2'))
        assert report.label is Principle.P3_WEAK

    def test_indefinite_symbol_is_unclassified(self):
        report = classify(scalar([{'outer': 'xi+xi^2', 'factors': [{}]}]))
        assert report.label is Principle.UNCLASSIFIED
        assert report.predicted is Prediction.NONE

    def test_no_terms_at_all(self):
        report = classify(scalar([[]]))
        assert report.label is Principle.P2


class TestFluxInvertibility(object):

    def test_quadratic_flux(self):
        flux = LocalFluxView(present=True, coefficients=(0.0, 0.0, 0.5))
        check = check_flux_invertibility(flux, -1.0, 1.0)
        assert check.invertible and bool(check)

    def test_cubic_flux_inflection_is_found(self):
        flux = LocalFluxView(present=True, coefficients=(0.0, 0.0, 0.0, 1.0))
        check = check_flux_invertibility(flux, -1.0, 1.0)
        assert not check.invertible
        assert abs(check.witness) < 1e-12
        assert check_flux_invertibility(flux, 0.5, 2.0).invertible

    def test_degenerate_range(self):
        flux = LocalFluxView(present=True, coefficients=(0.0, 0.0, 1.0))
        assert check_flux_invertibility(flux, 0.3, 0.3).invertible

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            check_flux_invertibility(LocalFluxView(present=False), 0.0, 1.0)
        with pytest.raises(ValueError):
            check_flux_invertibility(LocalFluxView(present=True, coefficients=(0.0, 1.0)), 1.0, 0.0)


class TestCovariance(object):

    @pytest.mark.parametrize('name', sorted(EXPECTED))
    def test_negated_coefficients_keep_the_label(self, name):
        report = classify(get_equation(name).scaled(-1.0))
        assert (report.label, report.predicted) == EXPECTED[name]

    @pytest.mark.parametrize('name', sorted(EXPECTED))
    def test_reflected_symbols_keep_the_label(self, name):
        report = classify(get_equation(name).map_symbols(reflect_symbol))
        assert (report.label, report.predicted) == EXPECTED[name]

    def test_reflected_flux_changes_sign(self):
        report = classify(get_equation('burgers').map_symbols(reflect_symbol))
        assert report.flux.coefficients == (0.0, 0.0, -0.5)
        assert check_flux_invertibility(report.flux, -1.0, 1.0).invertible

    def test_negated_flux(self):
        spec = get_equation('burgers')
        assert spec.scaled(-1.0).scaled(-1.0) == spec
        assert classify(spec.scaled(-1.0)).flux.coefficients == (0.0, 0.0, -0.5)
