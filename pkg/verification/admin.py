from django.contrib import admin

from .models import DiscrepancyRecord, SuiteRun


class DiscrepancyRecordInline(admin.TabularInline):
    model = DiscrepancyRecord
    extra = 0
    readonly_fields = ("theorem", "structure_key", "structure", "report", "created_at")


@admin.register(SuiteRun)
class SuiteRunAdmin(admin.ModelAdmin):
    list_display = ("id", "max_order", "structure_count", "discrepancy_count", "status", "elapsed_seconds", "created_at")
    list_filter = ("status", "max_order")
    readonly_fields = ("totals", "theorem_ids", "created_at")
    ordering = ("-created_at",)
    inlines = [DiscrepancyRecordInline]


@admin.register(DiscrepancyRecord)
class DiscrepancyRecordAdmin(admin.ModelAdmin):
    list_display = ("theorem", "structure_key", "run", "created_at")
    list_filter = ("theorem",)
    search_fields = ("structure_key",)
    readonly_fields = ("structure", "report", "created_at")
