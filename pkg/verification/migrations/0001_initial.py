# Generated by Django 5.2.6 on 2026-10-19 09:12

import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='SuiteRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('theorem_ids', models.JSONField(default=list)),
                ('max_order', models.PositiveSmallIntegerField()),
                ('samples', models.PositiveIntegerField(default=0)),
                ('seed', models.BigIntegerField()),
                ('workers', models.PositiveSmallIntegerField(default=1)),
                ('fail_fast', models.BooleanField(default=False)),
                ('structure_count', models.PositiveIntegerField(default=0)),
                ('totals', models.JSONField(blank=True, default=dict)),
                ('discrepancy_count', models.PositiveIntegerField(default=0)),
                ('stopped_early', models.BooleanField(default=False)),
                ('status', models.CharField(choices=[('passed', 'Passed'), ('failed', 'Failed')], max_length=16)),
                ('elapsed_seconds', models.FloatField(default=0)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ('-created_at', '-id'),
            },
        ),
        migrations.CreateModel(
            name='DiscrepancyRecord',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('theorem', models.CharField(max_length=32)),
                ('structure_key', models.CharField(db_index=True, max_length=128)),
                ('structure', models.JSONField()),
                ('report', models.JSONField()),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='discrepancies', to='verification.suiterun')),
            ],
            options={
                'ordering': ('run', 'id'),
                'indexes': [models.Index(fields=['theorem', 'structure_key'], name='verification_theorem_key_idx')],
            },
        ),
    ]
