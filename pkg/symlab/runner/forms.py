"""
Experiment config forms.

Plain WTForms forms fed with the decoded JSON sections of an experiment file
(``Form(data=section)``); each section is validated on its own and the error
messages are collected with the section name.
"""

from wtforms import Form, FloatField, IntegerField, StringField, BooleanField
from wtforms.validators import AnyOf, NumberRange, ValidationError

EXPERIMENTS = ('classify', 'simulate', 'verify')
SCHEMES = ('ETDRK4', 'IFRK4')


class WholeNumberField(IntegerField):
    """IntegerField that rejects 256.5 or true instead of truncating them."""

    def process_data(self, value):
        if isinstance(value, bool) or (isinstance(value, float) and not value.is_integer()):
            self.data = None
            raise ValueError(f'{self.label.text} must be a whole number.')
        super().process_data(value)


class GridForm(Form):
    """Periodic grid: N points on a period of length L."""

    N = WholeNumberField('N', default=256, validators=[
        NumberRange(min=16, message='N must be at least 16.'),
    ])
    L = FloatField('L', default=40.0, validators=[
        NumberRange(min=1e-12, message='L must be positive.'),
    ])

    def validate_N(self, field):
        """N must be a power of two."""
        if field.data is not None and field.data & (field.data - 1):
            raise ValidationError('N must be a power of two.')


class IntegratorForm(Form):
    """Time stepping settings."""

    dt = FloatField('dt', default=1e-3, validators=[
        NumberRange(min=1e-15, message='dt must be positive.'),
    ])
    t_end = FloatField('t_end', default=5.0, validators=[
        NumberRange(min=0.0, message='t_end must be nonnegative.'),
    ])
    snapshot_stride = WholeNumberField('snapshot_stride', default=100, validators=[
        NumberRange(min=1, message='snapshot_stride must be at least 1.'),
    ])
    dealias_fraction = FloatField('dealias_fraction', default=2.0 / 3.0, validators=[
        NumberRange(min=1e-6, max=1.0, message='dealias_fraction must lie in (0, 1].'),
    ])
    scheme = StringField('scheme', default='ETDRK4', validators=[
        AnyOf(SCHEMES, message='scheme must be ETDRK4 or IFRK4.'),
    ])

    def validate_dt(self, field):
        """dt may not exceed a positive t_end."""
        t_end = self.t_end.data
        if field.data is not None and t_end and field.data > t_end:
            raise ValidationError('dt must not exceed t_end.')


class TolerancesForm(Form):
    """Verdict tolerances."""

    sym_tol = FloatField('sym_tol', default=1e-6, validators=[
        NumberRange(min=0.0, message='sym_tol must be nonnegative.'),
    ])
    pred_tol = FloatField('pred_tol', default=1e-4, validators=[
        NumberRange(min=0.0, message='pred_tol must be nonnegative.'),
    ])


class ExperimentForm(Form):
    """Top-level scalar settings of an experiment file."""

    experiment = StringField('experiment', default='verify', filters=[
        lambda value: value.lower() if isinstance(value, str) else value,
    ], validators=[
        AnyOf(EXPERIMENTS, message='experiment must be classify, simulate or verify.'),
    ])
    output_dir = StringField('output_dir', default='')
    coefficients = BooleanField('coefficients', default=False)


def form_errors(section, form):
    """Flatten form.errors into 'section.field: message' lines."""
    return [
        f'{section}.{name}: {message}'
        for name, messages in form.errors.items()
        for message in messages
    ]
