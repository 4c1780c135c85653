import json
from typing import Any, Dict, Optional

from marshmallow import ValidationError

from glr_drawing.core.exceptions import DrawingError
from glr_drawing.models.dataclasses import DrawingDocument
from glr_drawing.models.drawing import GridDrawing
from glr_drawing.models.marshmallow.schemas import DrawingSchema
from glr_drawing.models.tree import OrderedTree, serialize_tree


def drawing_to_dict(drawing: GridDrawing, tree: Optional[OrderedTree] = None) -> Dict[str, Any]:
    """
    Convert the drawing into its JSON document, in canonical order.

    :param drawing: the drawing to convert.
    :param tree: the tree to embed in the document, if any.
    :return: the JSON-ready document.
    """
    document: Dict[str, Any] = dict(
        n=drawing.n,
        nodes=[dict(id=node, x=x, y=y) for node, (x, y) in enumerate(drawing.positions)],
        edges=[
            dict(parent=parent, child=child, bends=list(drawing.bends[(parent, child)]))
            for parent, child in sorted(drawing.bends)
        ],
        spines={str(root): list(spine) for root, spine in sorted(drawing.spines.items())},
    )
    if tree is not None:
        document["tree"] = serialize_tree(tree)
    return DrawingSchema().dump(document)


def drawing_to_json(drawing: GridDrawing, tree: Optional[OrderedTree] = None) -> str:
    """
    Serialize the drawing, byte-identical for identical drawings.

    :param drawing: the drawing to serialize.
    :param tree: the tree to embed in the document, if any.
    :return: the JSON text.
    """
    return json.dumps(drawing_to_dict(drawing, tree), sort_keys=True, separators=(",", ":"))


def drawing_from_json(text: str) -> DrawingDocument:
    """
    Deserialize a drawing document.

    :param text: the JSON text.
    :return: the drawing, with the embedded tree if present.
    :raises: DrawingError if the text is not a valid drawing document.
    """
    try:
        return DrawingSchema().load(json.loads(text))
    except json.JSONDecodeError as error:
        raise DrawingError(f"Not a JSON document: {error}.") from error
    except ValidationError as error:
        raise DrawingError(json.dumps(error.messages, sort_keys=True)) from error
