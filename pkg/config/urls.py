from django.contrib import admin
from django.urls import include, path
from drf_yasg import openapi
from drf_yasg.views import get_schema_view
from rest_framework import permissions

schema_view = get_schema_view(
    openapi.Info(title="ordsgp API", default_version="v1", description="Finite ordered semigroup toolkit"),
    public=True,
    permission_classes=(permissions.AllowAny,),
)

urlpatterns = [
    path("admin/", admin.site.urls),

    # Structure validation
    path("api/semigroups/", include("semigroups.urls")),

    # Profiles and recorded suite runs
    path("api/verification/", include("verification.urls")),

    # Schema
    path("api/docs/", schema_view.with_ui("swagger", cache_timeout=0), name="api-docs"),
]
