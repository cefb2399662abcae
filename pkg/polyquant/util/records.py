"""
Field tables for the labelled outputs of polyquant. Each table fixes the
column order of a CSV, the key order of a JSON document or the variable
attributes of a Dataset, so downstream parsers can rely on them.
"""

from collections import OrderedDict, namedtuple

#: Description of one output field
field_rec = namedtuple("field_rec", ["name", "type", "units", "desc"])

#: Columns of a convergence sweep, in output order
sweep_recs = [
    field_rec('m', int, '1', "Number of polygon sides"),
    field_rec('k', int, '1', "Number of means per corner-plus-side group"),
    field_rec('n', int, '1', "Total number of means, m*k"),
    field_rec('r', float, 'circumradius',
              "Optimal vertex radius (arc distance from each vertex to the"
              " Voronoi boundary of the corner point)"),
    field_rec('Vn', float, 'circumradius^2', "n-th quantization error"),
    field_rec('scaled', float, 'circumradius^2', "Scaled error n^2 Vn"),
    field_rec('coefficient', float, 'circumradius^2',
              "Quantization coefficient (1/3) m^2 sin^2(pi/m)"),
    field_rec('deviation', float, 'circumradius^2',
              "scaled - coefficient"),
]

#: Columns of a validation report, in output order
check_recs = [
    field_rec('name', str, None, "Name of the check"),
    field_rec('value', float, None, "Value produced by the numerical oracle"),
    field_rec('reference', float, None, "Closed-form or expected value"),
    field_rec('error', float, None,
              "Discrepancy measure compared against the tolerance"),
    field_rec('tolerance', float, None, "Largest acceptable error"),
    field_rec('passed', bool, None, "Whether error <= tolerance"),
]

#: Keys of the document emitted for a single optimal set
quantize_recs = [
    field_rec('m', int, '1', "Number of polygon sides"),
    field_rec('k', int, '1', "Number of means per corner-plus-side group"),
    field_rec('n', int, '1', "Total number of means"),
    field_rec('r', float, 'circumradius', "Optimal vertex radius"),
    field_rec('coefficient', float, 'circumradius^2',
              "Quantization coefficient of the polygon"),
    field_rec('V', float, 'circumradius^2', "n-th quantization error"),
    field_rec('points', list, 'circumradius',
              "Corner points a_1..a_m, then side points of sides 1..m"),
]


def field_names(recs):
    """ Names of a field table, in order. """
    return [rec.name for rec in recs]


def field_attrs(recs):
    """ Map field name -> xarray-style attribute dict (long_name, units). """
    attrs = OrderedDict()
    for rec in recs:
        attr = OrderedDict(long_name=rec.desc)
        if rec.units is not None:
            attr['units'] = rec.units
        attrs[rec.name] = attr
    return attrs


def ordered_record(recs, values):
    """ Pick the fields of `recs` out of the mapping `values`, in table order.

    Raises
    ------
    ValueError
        If a field of the table is missing from `values`.

    """
    missing = [rec.name for rec in recs if rec.name not in values]
    if missing:
        raise ValueError("Missing fields {}".format(missing))
    return OrderedDict((rec.name, values[rec.name]) for rec in recs)
