from django.urls import path

from .views import ValidateStructureView

urlpatterns = [
    path('validate/', ValidateStructureView.as_view(), name='semigroups-validate'),
]
