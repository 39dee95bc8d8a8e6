from django.db import models


class ExperimentRun(models.Model):
    name = models.CharField(max_length=100)
    seed = models.IntegerField()
    victim_kind = models.CharField(max_length=20)
    jammer_kind = models.CharField(max_length=20)
    ensemble_kind = models.CharField(max_length=20, default='single')
    scenario = models.JSONField()
    summary = models.JSONField()
    output_dir = models.CharField(max_length=255, blank=True)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-created_at']

    def __str__(self):
        return f'{self.name} (seed {self.seed})'
