import io

from rest_framework import serializers
from rest_framework.exceptions import ParseError, ValidationError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from .exceptions import ReportFormatError
from .records import FORMATS, MODES, STATUSES, CheckRecord, Report, RunConfig


class CheckRecordSerializer(serializers.Serializer):
    name = serializers.CharField()
    status = serializers.ChoiceField(choices=STATUSES)
    details = serializers.JSONField()
    witness = serializers.JSONField(allow_null=True)
    seconds = serializers.FloatField()

    def create(self, validated_data):
        return CheckRecord(**validated_data)


class RunConfigSerializer(serializers.Serializer):
    command = serializers.CharField()
    q = serializers.IntegerField(allow_null=True)
    m = serializers.IntegerField(allow_null=True)
    grid = serializers.BooleanField()
    symbolic = serializers.BooleanField()
    family = serializers.CharField(allow_null=True)
    branch = serializers.IntegerField()
    mode = serializers.ChoiceField(choices=MODES, allow_null=True)
    precision = serializers.IntegerField(allow_null=True)
    tolerance = serializers.CharField(allow_null=True)
    scheme = serializers.CharField(allow_null=True)
    output_format = serializers.ChoiceField(choices=FORMATS)
    seed = serializers.IntegerField(allow_null=True)
    coeffs = serializers.ListField(child=serializers.CharField(), allow_null=True)
    lo = serializers.CharField(allow_null=True)
    hi = serializers.CharField(allow_null=True)

    def create(self, validated_data):
        return RunConfig(**validated_data)


class ReportSerializer(serializers.Serializer):
    version = serializers.CharField()
    passed = serializers.BooleanField(read_only=True)
    config = RunConfigSerializer()
    records = CheckRecordSerializer(many=True)

    def create(self, validated_data):
        config = RunConfigSerializer().create(dict(validated_data['config']))
        records = [CheckRecordSerializer().create(dict(r)) for r in validated_data['records']]
        return Report(validated_data['version'], config, records)


def render_report(report):
    return JSONRenderer().render(ReportSerializer(report).data)


def parse_report(content):
    """Rebuild a Report from the bytes produced by render_report."""
    try:
        data = JSONParser().parse(io.BytesIO(content))
        serializer = ReportSerializer(data=data)
        serializer.is_valid(raise_exception=True)
    except (ParseError, ValidationError) as exc:
        raise ReportFormatError(f'not a toolkit report: {exc.detail}') from exc
    return serializer.save()


def record_to_data(record):
    """Plain dict form of a record, as passed between Celery workers."""
    return dict(CheckRecordSerializer(record).data)


def record_from_data(data):
    serializer = CheckRecordSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.save()
