from rest_framework import serializers

from .models import DiscrepancyRecord, SuiteRun


class DiscrepancyRecordSerializer(serializers.ModelSerializer):
    class Meta:
        model = DiscrepancyRecord
        fields = ("id", "theorem", "structure_key", "structure", "report", "created_at")


class SuiteRunSerializer(serializers.ModelSerializer):
    discrepancies = DiscrepancyRecordSerializer(many=True, read_only=True)

    class Meta:
        model = SuiteRun
        fields = (
            "id",
            "theorem_ids",
            "max_order",
            "samples",
            "seed",
            "workers",
            "fail_fast",
            "structure_count",
            "totals",
            "discrepancy_count",
            "stopped_early",
            "status",
            "elapsed_seconds",
            "created_at",
            "discrepancies",
        )
        read_only_fields = fields
