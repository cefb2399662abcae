import numpy as np
from numpy.testing import assert_allclose

from pytest import approx, mark

from polyquant.coefficient import quant_coefficient
from polyquant.core import convergence_dataset, sweep_frame, validate
from polyquant.polygon import optimal_error, vertex_radius
from polyquant.util.records import check_recs, field_names, sweep_recs


def test_convergence_dataset():
    ds = convergence_dataset([3, 4, 6], [1, 2, 10])
    assert ds['Vn'].dims == ('m', 'k')
    assert ds['coefficient'].dims == ('m', )
    assert list(ds['m'].values) == [3, 4, 6]
    assert ds['r'].sel(m=6, k=2).item() == approx(vertex_radius(6, 2))
    assert ds['Vn'].sel(m=4, k=10).item() == approx(
        optimal_error(4, 10).total)
    assert ds['coefficient'].sel(m=6).item() == approx(3., abs=1e-12)
    assert 'history' in ds.attrs
    assert ds['Vn'].attrs['long_name']


def test_sweep_frame_columns():
    df = sweep_frame([3, 4], [1, 2, 3])
    assert list(df.columns) == field_names(sweep_recs)
    assert len(df) == 6
    assert list(df['m']) == [3, 3, 3, 4, 4, 4]
    assert list(df['k']) == [1, 2, 3, 1, 2, 3]
    assert list(df['n']) == [3, 6, 9, 4, 8, 12]
    assert_allclose(df['coefficient'],
                    quant_coefficient(np.array([3, 3, 3, 4, 4, 4])))
    assert_allclose(df['deviation'], df['scaled'] - df['coefficient'])


def test_hexagon_sweep_converges():
    df = sweep_frame([6], [2, 20, 200, 2000])
    deviation = np.abs(df['scaled'].values - 3.)
    assert np.all(np.diff(deviation) < 0)
    assert deviation[2] < 0.004


@mark.parametrize("m, k", [(6, 2), (4, 3), (3, 1), (5, 2)])
def test_validate_passes(m, k):
    df = validate(m, k, tol=1e-9, samples=10**5)
    assert list(df.columns) == field_names(check_recs)
    assert df['passed'].all(), df[~df['passed']]
    assert 'history' in df.attrs


def test_validate_checks_present():
    names = set(validate(6, 2, samples=10**5)['name'])
    for name in ('quadrature_error', 'decomposition', 'radius_oracle',
                 'lloyd_fixed_point', 'rotational_symmetry',
                 'mirror_symmetry', 'partition', 'unimodality',
                 'corner_radial_form'):
        assert name in names
    names_k1 = set(validate(6, 1, samples=10**5)['name'])
    assert 'radius_oracle' not in names_k1
    assert 'unimodality' not in names_k1


def test_validate_fails_with_impossible_tolerance():
    df = validate(6, 2, tol=1e-300, samples=10**4)
    assert not df['passed'].all()
