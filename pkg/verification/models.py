from django.db import models


class RunStatus(models.TextChoices):
    PASSED = "passed", "Passed"
    FAILED = "failed", "Failed"


class SuiteRun(models.Model):
    theorem_ids = models.JSONField(default=list)
    max_order = models.PositiveSmallIntegerField()
    samples = models.PositiveIntegerField(default=0)
    seed = models.BigIntegerField()
    workers = models.PositiveSmallIntegerField(default=1)
    fail_fast = models.BooleanField(default=False)
    structure_count = models.PositiveIntegerField(default=0)
    totals = models.JSONField(default=dict, blank=True)
    discrepancy_count = models.PositiveIntegerField(default=0)
    stopped_early = models.BooleanField(default=False)
    status = models.CharField(max_length=16, choices=RunStatus.choices)
    elapsed_seconds = models.FloatField(default=0)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ("-created_at", "-id")

    def __str__(self) -> str:
        return f"Run {self.pk} up to order {self.max_order}: {self.status} ({self.discrepancy_count} discrepancies)"


class DiscrepancyRecord(models.Model):
    run = models.ForeignKey(SuiteRun, on_delete=models.CASCADE, related_name="discrepancies")
    theorem = models.CharField(max_length=32)
    structure_key = models.CharField(max_length=128, db_index=True)
    structure = models.JSONField()
    report = models.JSONField()
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ("run", "id")
        indexes = [
            models.Index(fields=["theorem", "structure_key"], name="verification_theorem_key_idx"),
        ]

    def __str__(self) -> str:
        return f"{self.theorem} on {self.structure_key}"
