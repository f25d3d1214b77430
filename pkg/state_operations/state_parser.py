## Ingestion of JSON state documents: marshmallow validates the shape, dacite builds the dataclasses
import json
import logging
import numbers
import sys
from typing import Any, Tuple

from dacite import Config, from_dict
from marshmallow import RAISE, Schema, ValidationError, fields, validate, validates_schema

from common.data_definitions import STATE_DIMENSION
from common.exceptions import SchemaError

from .data_definitions import DensityMatrix8, StateSpec
from .state_helper import build_density

logger = logging.getLogger("django")

STATE_KINDS = ("pure", "matrix", "mix", "catalog")


def _is_real_number(value: Any) -> bool:
    return isinstance(value, numbers.Real) and not isinstance(value, bool)


class AmplitudeField(fields.Field):
    """A complex amplitude written either as a real number or as a [re, im] pair"""

    default_error_messages = {"invalid": "Amplitude must be a real number or a [re, im] pair."}

    def _deserialize(self, value, attr, data, **kwargs):
        if _is_real_number(value):
            return [float(value), 0.0]
        if isinstance(value, (list, tuple)) and len(value) == 2 and all(_is_real_number(part) for part in value):
            return [float(value[0]), float(value[1])]
        raise self.make_error("invalid")


def _square_rows(rows):
    if len(rows) != STATE_DIMENSION or any(len(row) != STATE_DIMENSION for row in rows):
        raise ValidationError("Expected an 8 x 8 array.")


class PureStateSchema(Schema):
    class Meta:
        unknown = RAISE

    amplitudes = fields.List(AmplitudeField(), required=True, validate=validate.Length(equal=STATE_DIMENSION))


class MatrixStateSchema(Schema):
    class Meta:
        unknown = RAISE

    re = fields.List(fields.List(fields.Float(allow_nan=False)), required=True, validate=_square_rows)
    im = fields.List(fields.List(fields.Float(allow_nan=False)), required=True, validate=_square_rows)


class MixturePartSchema(Schema):
    class Meta:
        unknown = RAISE

    weight = fields.Float(required=True, allow_nan=False)
    state = fields.Nested(lambda: StateDocumentSchema(), required=True)


class MixtureStateSchema(Schema):
    class Meta:
        unknown = RAISE

    parts = fields.List(fields.Nested(MixturePartSchema), required=True, validate=validate.Length(min=1))


class CatalogStateSchema(Schema):
    class Meta:
        unknown = RAISE

    name = fields.String(required=True, validate=validate.Length(min=1))
    params = fields.List(fields.Float(allow_nan=False), load_default=list)


class StateDocumentSchema(Schema):
    class Meta:
        unknown = RAISE

    pure = fields.Nested(PureStateSchema)
    matrix = fields.Nested(MatrixStateSchema)
    mix = fields.Nested(MixtureStateSchema)
    catalog = fields.Nested(CatalogStateSchema)

    @validates_schema(pass_original=True)
    def exactly_one_kind(self, data, original_data, **kwargs):
        present = [kind for kind in STATE_KINDS if isinstance(original_data, dict) and kind in original_data]
        if len(present) != 1:
            raise ValidationError("Expected exactly one of pure, matrix, mix, catalog; found {found}.".format(found=present or "none"))


def first_error(messages: Any, path: str = "$") -> Tuple[str, str]:
    """Walk a marshmallow error dictionary down to its first leaf and return (json path, message)"""
    if isinstance(messages, dict):
        key = sorted(messages.keys(), key=lambda k: (isinstance(k, str), str(k)))[0]
        if key == "_schema":
            return first_error(messages[key], path)
        child = "{path}[{key}]".format(path=path, key=key) if isinstance(key, int) else "{path}.{key}".format(path=path, key=key)
        return first_error(messages[key], child)
    if isinstance(messages, list) and messages:
        return first_error(messages[0], path)
    return path, str(messages)


def parse_state_document(document: Any) -> StateSpec:
    """Validate an already decoded JSON document and build its StateSpec, without resolving it to a matrix"""
    try:
        validated = StateDocumentSchema().load(document)
    except ValidationError as err:
        path, message = first_error(err.messages)
        raise SchemaError(path=path, message=message) from err
    return from_dict(data_class=StateSpec, data=validated, config=Config(check_types=True))


def parse_state_file(text: str) -> StateSpec:
    """Parse a UTF-8 JSON state document; every state invariant is checked before the spec is returned"""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError(path="$", message="Invalid JSON: {msg} at line {line} column {col}".format(msg=err.msg, line=err.lineno, col=err.colno)) from err
    spec = parse_state_document(document)
    build_density(spec)
    logger.info("Parsed a %s state document" % spec.kind)
    return spec


def parse_and_build(text: str) -> Tuple[StateSpec, DensityMatrix8]:
    spec = parse_state_file(text)
    return spec, build_density(spec)


def decode_state_bytes(raw: bytes, source: str) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as err:
        raise SchemaError(
            path="$",
            message="State document {source} is not valid UTF-8: byte {position} cannot be decoded".format(source=source, position=err.start),
        ) from err


def load_state_document(path: str) -> StateSpec:
    """Read a state document from a file path, '-' reads standard input"""
    if path == "-":
        return parse_state_file(decode_state_bytes(sys.stdin.buffer.read(), "on standard input"))
    try:
        with open(path, "rb") as state_file:
            raw = state_file.read()
    except OSError as err:
        raise SchemaError(path="$", message="Cannot read state file {path}: {reason}".format(path=path, reason=err.strerror)) from err
    return parse_state_file(decode_state_bytes(raw, path))
