from rest_framework import status, viewsets
from rest_framework.response import Response
from rest_framework.views import APIView

from semigroups.serializers import OrderedSemigroupSerializer
from semigroups.structures import OrderedSemigroup, SizeCapExceeded
from .models import SuiteRun
from .serializers import SuiteRunSerializer
from .services import build_profile


class SuiteRunViewSet(viewsets.ReadOnlyModelViewSet):
    queryset = SuiteRun.objects.prefetch_related("discrepancies")
    serializer_class = SuiteRunSerializer


class AnalyzeStructureView(APIView):
    serializer_class = OrderedSemigroupSerializer

    def post(self, request):
        serializer = self.serializer_class(data=request.data)
        serializer.is_valid(raise_exception=True)
        outcome = serializer.validated_data["outcome"]
        if not isinstance(outcome, OrderedSemigroup):
            return Response(outcome.as_dict(), status=status.HTTP_400_BAD_REQUEST)
        try:
            return Response(build_profile(outcome))
        except SizeCapExceeded as exc:
            return Response({"error": str(exc)}, status=status.HTTP_400_BAD_REQUEST)
