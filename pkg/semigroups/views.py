from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import APIView

from semigroups.serializers import OrderedSemigroupSerializer
from semigroups.structures import OrderedSemigroup


class ValidateStructureView(APIView):
    serializer_class = OrderedSemigroupSerializer

    def post(self, request):
        serializer = self.serializer_class(data=request.data)
        serializer.is_valid(raise_exception=True)
        outcome = serializer.validated_data["outcome"]
        if isinstance(outcome, OrderedSemigroup):
            return Response({"ok": True, "violations": [], "structure_key": outcome.key})
        return Response(outcome.as_dict(), status=status.HTTP_400_BAD_REQUEST)
