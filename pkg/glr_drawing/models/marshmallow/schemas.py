from typing import Any, Dict

from marshmallow import Schema, ValidationError, fields, post_load, validates_schema
from marshmallow.validate import Length, Range

from glr_drawing.models.dataclasses import DrawingDocument, TreeFamilySpec
from glr_drawing.models.drawing import GridDrawing
from glr_drawing.models.enums import TreeKind
from glr_drawing.models.marshmallow.fields import (
    EnumField,
    GridPoint,
    NodeId,
    StrictInteger,
    TreeText,
)
from glr_drawing.models.tree import parse_tree

MAX_SEED = 2 ** 64 - 1


class NodeSchema(Schema):
    id = NodeId()
    x = StrictInteger(required=True)
    y = StrictInteger(required=True)


class EdgeSchema(Schema):
    parent = NodeId(data_key="from")
    child = NodeId(data_key="to")
    bends = fields.List(GridPoint(), required=False, missing=list)


class DrawingSchema(Schema):
    """
    Validate and deserialize a drawing document into the corresponding DrawingDocument object.
    """

    n = StrictInteger(required=True, validate=Range(min=1))
    nodes = fields.List(fields.Nested(NodeSchema), required=True, validate=Length(min=1))
    edges = fields.List(fields.Nested(EdgeSchema), required=True)
    spines = fields.Dict(
        keys=fields.String(), values=fields.List(NodeId()), required=False, missing=dict
    )
    tree = TreeText(required=False, missing=None)

    @validates_schema
    def validate_ids(self, data: Dict, **kwargs: Any) -> None:  # pylint: disable=no-self-use
        """
        Validate that every node id in [0, n) is placed exactly once and that edges refer to them.

        :param data: the deserialized data.
        :param kwargs: the additional unused arguments coming from the decorator.
        :raises: ValidationError if the ids are inconsistent.
        """
        n = data["n"]
        ids = sorted(node["id"] for node in data["nodes"])
        if ids != list(range(n)):
            raise ValidationError(f"Node ids must be exactly 0..{n - 1}.", "nodes")
        for edge in data["edges"]:
            if edge["parent"] >= n or edge["child"] >= n:
                raise ValidationError(
                    f"Edge ({edge['parent']}, {edge['child']}) refers to a missing node.", "edges"
                )
        for key in data["spines"]:
            if not key.isdigit() or int(key) >= n:
                raise ValidationError(f"Spine key {key} is not a node id.", "spines")

    @post_load
    def create_document(  # pylint: disable=no-self-use
        self, data: Dict, **kwargs: Any
    ) -> DrawingDocument:
        """
        Return the DrawingDocument object associated with the deserialized data.

        :param data: the deserialized data.
        :param kwargs: the additional unused arguments coming from the decorator.
        :return: the DrawingDocument object associated with the given data.
        """
        positions = [(0, 0)] * data["n"]
        for node in data["nodes"]:
            positions[node["id"]] = (node["x"], node["y"])
        drawing = GridDrawing(
            positions=tuple(positions),
            bends={
                (edge["parent"], edge["child"]): tuple(edge["bends"]) for edge in data["edges"]
            },
            spines={int(key): tuple(value) for key, value in data["spines"].items()},
        )
        tree = parse_tree(data["tree"]) if data["tree"] is not None else None
        return DrawingDocument(drawing=drawing, tree=tree)


class TreeFamilySpecSchema(Schema):
    """
    Validate and deserialize the raw data into the corresponding TreeFamilySpec object.
    """

    kind = EnumField(TreeKind)
    n = StrictInteger(required=False, missing=None, validate=Range(min=1))
    arity = StrictInteger(required=False, missing=None, validate=Range(min=1))
    height = StrictInteger(required=False, missing=None, validate=Range(min=0))
    k = StrictInteger(required=False, missing=None, validate=Range(min=1))
    max_arity = StrictInteger(required=False, missing=None, validate=Range(min=1))
    seed = StrictInteger(required=False, missing=0, validate=Range(min=0, max=MAX_SEED))

    @post_load
    def create_family(  # pylint: disable=no-self-use
        self, data: Dict, **kwargs: Any
    ) -> TreeFamilySpec:
        """
        Return the TreeFamilySpec object associated with the deserialized data.

        :param data: the deserialized data.
        :param kwargs: the additional unused arguments coming from the decorator.
        :return: the TreeFamilySpec object associated with the given data.
        """
        return TreeFamilySpec(**data)
