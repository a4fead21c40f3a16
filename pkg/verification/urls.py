from django.urls import include, path
from rest_framework.routers import DefaultRouter

from .views import AnalyzeStructureView, SuiteRunViewSet

router = DefaultRouter()
router.register(r'runs', SuiteRunViewSet)

urlpatterns = [
    path('', include(router.urls)),
    path('analyze/', AnalyzeStructureView.as_view(), name='verification-analyze'),
]
