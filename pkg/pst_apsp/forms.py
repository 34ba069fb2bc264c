from wtforms import (BooleanField, FieldList, Form, IntegerField, SelectField,
                     SelectMultipleField)
from wtforms.validators import DataRequired, NumberRange, StopValidation, \
    ValidationError

FAMILIES = ('hypercube', 'scale-free-sparse', 'scale-free-dense')
ALGORITHMS = ('pst', 'bfs')


#helper functions
def validate_present(form, field):
    if field.data is None:
        raise StopValidation('This field is required!')


def validate_sizes(form, field):
    if not field.data:
        raise ValidationError('At least one size is required!')
    if form.family.data == 'hypercube':
        for n in field.data:
            if n is not None and n & (n - 1):
                raise ValidationError(
                    f'Hypercube sizes must be powers of two (got {n})!')


def validate_scale_free_size(form, field):
    if form.family.data != 'hypercube' and field.data is not None \
            and field.data < 3:
        raise ValidationError('Scale-free graphs need n >= 3!')


class BenchConfigForm(Form):
    family = SelectField(
        'family', validators=[DataRequired()],
        choices=[(f, f) for f in FAMILIES]
    )
    sizes = FieldList(
        IntegerField('n', validators=[
            validate_present, NumberRange(min=2, message='n must be >= 2!'),
            validate_scale_free_size]),
        validators=[validate_sizes], min_entries=1
    )
    algorithms = SelectMultipleField(
        'algorithms', validators=[DataRequired()],
        choices=[(a, a) for a in ALGORITHMS]
    )
    repetitions = IntegerField(
        'repetitions',
        validators=[validate_present, NumberRange(min=1)]
    )
    seed = IntegerField(
        'seed',
        validators=[validate_present, NumberRange(min=0, max=2 ** 64 - 1)]
    )
    verify = BooleanField(
        'verify'
    )
    verify_cutoff = IntegerField(
        'verify_cutoff',
        validators=[validate_present, NumberRange(min=0)]
    )
