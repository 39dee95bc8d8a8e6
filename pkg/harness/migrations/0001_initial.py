from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='ExperimentRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('name', models.CharField(max_length=100)),
                ('seed', models.IntegerField()),
                ('victim_kind', models.CharField(max_length=20)),
                ('jammer_kind', models.CharField(max_length=20)),
                ('ensemble_kind', models.CharField(default='single', max_length=20)),
                ('scenario', models.JSONField()),
                ('summary', models.JSONField()),
                ('output_dir', models.CharField(blank=True, max_length=255)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ['-created_at'],
            },
        ),
    ]
