from rest_framework import serializers

from semigroups.structures import StructureShapeError
from semigroups.utils import validate_data


class OrderedSemigroupSerializer(serializers.Serializer):
    """The JSON structure format: ``{"order": n, "table": [[...]], "leq": [[bool, ...], ...]}``."""

    order = serializers.IntegerField(min_value=1)
    table = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField(min_value=0)))
    leq = serializers.ListField(child=serializers.ListField(child=serializers.BooleanField()))

    def validate(self, attrs):
        try:
            attrs["outcome"] = validate_data(attrs)
        except StructureShapeError as exc:
            raise serializers.ValidationError({"shape": str(exc)}) from exc
        return attrs
