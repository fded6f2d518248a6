from django.apps import AppConfig


class AppsConfig(AppConfig):
    name = 'apps'
    verbose_name = '로그 적분 li(x) 고정밀 계산'
